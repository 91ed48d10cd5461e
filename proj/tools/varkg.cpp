#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "varkg/checkpoint.hpp"
#include "varkg/error.hpp"
#include "varkg/graph_io.hpp"
#include "varkg/grid.hpp"
#include "varkg/kernels.hpp"
#include "varkg/pipeline.hpp"
#include "varkg/rdf_emit.hpp"
#include "varkg/rdf_serialize.hpp"
#include "varkg/text_input.hpp"
#include "varkg/train.hpp"
#include "varkg/vocabulary.hpp"

namespace fs = std::filesystem;
using namespace varkg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

/** Every flag of every subcommand; CLI11 binds straight into these. */
struct Options {
    int threads = 1;
    std::vector<std::string> inputs;
    std::string out;
    bool strict = false;
    std::string accession;
    std::string accession_map;

    std::string mode = "variant-id";
    std::string encoding = "onehot";
    std::uint64_t seed = 0;
    bool stratified = false;
    bool drop_accession = false;
    std::size_t clique_cap = 1024;
    std::vector<double> ratios{0.6, 0.2, 0.2};
    std::string vocab_fit = "all";

    std::string graph;
    std::string model = "both";
    std::vector<std::size_t> hidden{2, 8, 16, 32};
    std::vector<double> lr{0.001, 0.01};
    std::size_t train_hidden = 16;
    double train_lr = 0.01;
    long epochs = 0;  // 0: paired with the learning rate
    std::string hidden_as = "width";
    std::size_t depth = 2;
    std::size_t width = 16;
    std::string init = "glorot";
    long log_every = 0;

    std::vector<std::string> where;
    std::size_t limit = 0;
};

/** Output files of a run, relative to the output directory. */
struct RunRecord {
    std::string command;
    std::vector<fs::path> inputs;
    fs::path out_dir;
    std::vector<std::string> outputs;
};

/** The parsed options as a config file; feeding it back through --config repeats the run. */
std::string canonical_config(const CLI::App& app) {
    std::string out;
    for (const auto* opt : app.get_options()) {
        if (opt->get_configurable() && !opt->get_lnames().empty() && opt->get_lnames()[0] != "config" &&
            opt->get_lnames()[0] != "help") {
            out += opt->get_lnames()[0] + "=" + (opt->count() ? opt->as<std::string>() : opt->get_default_str()) + "\n";
        }
    }
    for (const auto* sub : app.get_subcommands()) {
        out += "[" + sub->get_name() + "]\n" + sub->config_to_str(true, false);
    }
    return out;
}

void write_manifest(const CLI::App& app, const RunRecord& run) {
    nlohmann::ordered_json m;
    m["tool"] = "varkg";
    m["manifest_version"] = 1;
    m["command"] = run.command;
    m["config"] = canonical_config(app);
    auto& inputs = m["inputs"] = nlohmann::ordered_json::array();
    for (const auto& p : run.inputs) inputs.push_back({{"path", p.generic_string()}, {"md5", md5_file(p)}});
    auto& outputs = m["outputs"] = nlohmann::ordered_json::array();
    for (const auto& name : run.outputs) {
        outputs.push_back({{"path", name}, {"md5", md5_file(run.out_dir / name)}});
    }
    write_text_file(run.out_dir / "run-manifest.json", m.dump(2) + "\n");
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw InputError("cannot create output directory " + dir.string());
}

const std::vector<std::string> kVcfExtensions{".vcf", ".vcf.gz"};
const std::vector<std::string> kCaddExtensions{".tsv", ".tsv.gz"};
const std::vector<std::string> kRdfExtensions{".nq", ".nq.gz", ".nt", ".nt.gz", ".ttl", ".ttl.gz"};

template <typename Convert>
int run_convert(const CLI::App& app, const Options& o, const std::string& command,
                const std::vector<std::string>& extensions, Convert convert) {
    auto files = expand_inputs(o.inputs, extensions);
    const fs::path out_dir(o.out);
    ensure_dir(out_dir);
    RunRecord run{command, files, out_dir, {}};
    if (files.empty()) {
        std::cout << "0 files\n";
        write_manifest(app, run);
        return kExitOk;
    }
    if (!o.accession.empty() && files.size() > 1) {
        throw InputError("--accession applies to a single input; use --accession-map for several");
    }
    AccessionMap map = o.accession_map.empty() ? AccessionMap{} : AccessionMap::load(o.accession_map);

    std::vector<std::string> accessions;
    for (const auto& f : files) {
        if (!o.accession.empty()) {
            accessions.push_back(o.accession);
        } else if (auto a = map.find(f)) {
            accessions.push_back(*a);
        } else {
            accessions.push_back(accession_from_path(f));
        }
        if (accessions.back().empty()) throw InputError("empty accession for " + f.string());
    }
    {
        auto sorted = accessions;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) throw InputError("two inputs map to accession " + *dup);
    }

    ParseOptions parse{o.strict};
    std::vector<FileReport> reports(files.size());
    const auto n = static_cast<std::ptrdiff_t>(files.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, o.threads))
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        reports[static_cast<std::size_t>(i)] =
            convert(files[static_cast<std::size_t>(i)], out_dir, accessions[static_cast<std::size_t>(i)], parse);
    }

    std::size_t failed = 0;
    for (const auto& r : reports) {
        for (const auto& d : r.diagnostics) std::cerr << r.input.string() << ":" << to_string(d) << '\n';
        std::cout << r.summary() << '\n';
        if (r.failure) {
            ++failed;
        } else {
            run.outputs.push_back(r.output.filename().string());
        }
    }
    std::cout << (files.size() - failed) << " of " << files.size() << " files converted\n";
    if (failed) {
        std::cout << "failures:\n";
        for (const auto& r : reports) {
            if (r.failure) std::cout << "  " << r.input.string() << ": " << *r.failure << '\n';
        }
    }
    write_manifest(app, run);
    return failed ? kExitInput : kExitOk;
}

int cmd_emit_ontology(const CLI::App& app, const Options& o) {
    const fs::path out_dir(o.out);
    ensure_dir(out_dir);
    std::ostringstream ttl;
    auto n = serialize_turtle(emit_ontology(), vocab::default_prefixes(), ttl);
    write_text_file(out_dir / "ontology.ttl", ttl.str());
    std::cout << n << " statements -> " << (out_dir / "ontology.ttl").string() << '\n';
    write_manifest(app, {"emit-ontology", {}, out_dir, {"ontology.ttl"}});
    return kExitOk;
}

ProjectionMode parse_mode(const std::string& text) {
    if (text == "variant-id") return ProjectionMode::variant_id;
    if (text == "both") return ProjectionMode::variant_id_and_accession;
    throw std::invalid_argument("unknown mode: " + text);
}

int cmd_build(const CLI::App& app, const Options& o) {
    auto files = expand_inputs(o.inputs, kRdfExtensions);
    const fs::path out_dir(o.out);
    ensure_dir(out_dir);
    if (o.ratios.size() != 3) throw std::invalid_argument("--split needs three ratios");

    BuildOptions b;
    b.projection.mode = parse_mode(o.mode);
    b.projection.clique_cap = o.clique_cap;
    b.encoding = parse_encoding(o.encoding);
    b.ratios = {o.ratios[0], o.ratios[1], o.ratios[2]};
    b.seed = o.seed;
    b.stratified = o.stratified;
    b.include_accession = !o.drop_accession;
    b.vocab_fit = o.vocab_fit;

    QuadStore store = load_store(files);
    BuildOutput built = build_graph(store, b);

    std::ostringstream report;
    report << files.size() << " input files, " << store.size() << " statements, " << built.rows.size()
           << " dataset rows\n";
    report << graph_summary(built.graph) << '\n';
    const auto counts = built.label_counts();
    report << "labels:";
    for (std::size_t c = 0; c < counts.size(); ++c) report << ' ' << c << '=' << counts[c];
    report << " (labeled " << built.labeled() << ", unlabeled " << built.graph.num_nodes() - built.labeled() << ")\n";
    auto count_split = [&](Split s) { return std::count(built.graph.split.begin(), built.graph.split.end(), s); };
    report << "split: train=" << count_split(Split::train) << " val=" << count_split(Split::val)
           << " test=" << count_split(Split::test) << '\n';
    report << "features: " << built.graph.features.cols() << " columns (" << to_string(b.encoding) << ")\n";
    for (const auto& w : built.warnings) std::cerr << "warning: " << w << '\n';
    std::cout << report.str();

    if (built.labeled() == 0) {
        std::cerr << "error: no labeled nodes; no CADD score matched any variant (check accessions and positions)\n";
        return kExitInput;
    }

    std::ofstream tsv(out_dir / "dataset.tsv", std::ios::binary);
    write_dataset_tsv(built.rows, tsv);
    std::ofstream jsonl(out_dir / "dataset.jsonl", std::ios::binary);
    write_dataset_jsonl(built.rows, jsonl);
    std::ofstream vocab(out_dir / "vocab.tsv", std::ios::binary);
    built.vocab.save(vocab);
    tsv.close();
    jsonl.close();
    vocab.close();
    if (!tsv || !jsonl || !vocab) throw InputError("failed writing build outputs to " + out_dir.string());
    export_graph(built.graph, out_dir / "graph.bin");
    write_text_file(out_dir / "build-report.txt", report.str());

    write_manifest(app, {"build", files, out_dir,
                         {"dataset.tsv", "dataset.jsonl", "vocab.tsv", "graph.bin", "build-report.txt"}});
    return kExitOk;
}

void write_run_outputs(const fs::path& out_dir, const std::string& stem, const TrainResult& run,
                       const std::optional<Metrics>& test, std::vector<std::string>& outputs) {
    save_model(run.model, out_dir / (stem + ".model"));
    write_text_file(out_dir / (stem + "-history.csv"), format_history_csv(run.history));
    outputs.push_back(stem + ".model");
    outputs.push_back(stem + "-history.csv");
    if (test) {
        write_text_file(out_dir / (stem + "-confusion.csv"), format_confusion_csv(*test));
        write_text_file(out_dir / (stem + "-confusion.txt"), render_confusion(*test));
        outputs.push_back(stem + "-confusion.csv");
        outputs.push_back(stem + "-confusion.txt");
    }
}

int cmd_train(const CLI::App& app, const Options& o) {
    const fs::path out_dir(o.out);
    ensure_dir(out_dir);
    auto graph = import_graph(o.graph);

    GridConfig g;
    g.hidden_meaning = parse_hidden_meaning(o.hidden_as);
    g.fixed_depth = o.depth;
    g.fixed_width = o.width;
    g.seed = o.seed;
    g.init = parse_init_scheme(o.init);
    ModelConfig mc = model_config_for(g, parse_model_kind(o.model), o.train_hidden, graph.features.cols());

    TrainConfig tc;
    tc.learning_rate = o.train_lr;
    tc.epochs = o.epochs > 0 ? o.epochs : default_epochs_for(o.train_lr);
    tc.log_every = o.log_every;
    tc.log = &std::cerr;

    const auto ops = GraphOperators::from(graph.adjacency);
    auto run = train(graph, ops, mc, tc);
    std::cout << to_string(mc.kind) << " hidden=" << o.train_hidden << " lr=" << format_real(tc.learning_rate)
              << " epochs=" << tc.epochs << " best_epoch=" << run.best_epoch
              << " val=" << format_percent(run.best_val_accuracy) << '\n';

    std::optional<Metrics> test;
    const auto mask = graph.mask(Split::test);
    if (std::any_of(mask.begin(), mask.end(), [](auto m) { return m; })) {
        test = evaluate(run.model, graph, ops, mask);
        std::cout << "test=" << format_percent(test->accuracy) << '\n' << render_confusion(*test);
    }
    std::vector<std::string> outputs;
    write_run_outputs(out_dir, to_string(mc.kind), run, test, outputs);
    write_manifest(app, {"train", {fs::path(o.graph)}, out_dir, outputs});
    return kExitOk;
}

int cmd_grid(const CLI::App& app, const Options& o) {
    const fs::path out_dir(o.out);
    ensure_dir(out_dir);
    auto graph = import_graph(o.graph);

    GridConfig g;
    if (o.model == "both") {
        g.kinds = {ModelKind::sage, ModelKind::gcn};
    } else {
        g.kinds = {parse_model_kind(o.model)};
    }
    g.hidden = o.hidden;
    g.learning_rates = o.lr;
    if (o.epochs > 0) g.epochs = o.epochs;
    g.hidden_meaning = parse_hidden_meaning(o.hidden_as);
    g.fixed_depth = o.depth;
    g.fixed_width = o.width;
    g.seed = o.seed;
    g.init = parse_init_scheme(o.init);

    auto result = grid_search(graph, g, &std::cerr);
    auto table = format_grid_table(g, result);
    std::cout << table;

    std::vector<std::string> outputs{"grid.txt", "grid.csv"};
    write_text_file(out_dir / "grid.txt", table);
    write_text_file(out_dir / "grid.csv", format_grid_csv(result));
    for (std::size_t k = 0; k < g.kinds.size(); ++k) {
        const auto& cell = result.cells[result.best_cells[k]];
        write_run_outputs(out_dir, "best-" + to_string(g.kinds[k]), result.best_runs[k], cell.test, outputs);
    }
    write_manifest(app, {"grid", {fs::path(o.graph)}, out_dir, outputs});
    return kExitOk;
}

int cmd_query(const CLI::App& app, const Options& o) {
    auto files = expand_inputs(o.inputs, kRdfExtensions);
    if (o.where.empty()) throw std::invalid_argument("query needs at least one --where pattern");
    std::vector<Pattern> patterns;
    std::vector<std::string> variables;
    auto note = [&](const PatternSlot& s, bool hidden) {
        if (s.is_variable && !hidden && std::find(variables.begin(), variables.end(), s.variable) == variables.end()) {
            variables.push_back(s.variable);
        }
    };
    for (std::size_t i = 0; i < o.where.size(); ++i) {
        auto p = parse_pattern(o.where[i], i);
        note(p.subject, false);
        note(p.predicate, false);
        note(p.object, false);
        note(p.graph, p.graph.variable == "_g" + std::to_string(i));
        patterns.push_back(std::move(p));
    }
    QuadStore store = load_store(files);
    auto bindings = store.match(patterns);

    std::vector<std::vector<std::string>> rows;
    for (const auto& b : bindings) {
        std::vector<std::string> row;
        for (const auto& v : variables) {
            auto it = b.find(v);
            row.push_back(it == b.end() ? "" : format_term_nt(it->second));
        }
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    if (o.limit > 0 && rows.size() > o.limit) rows.resize(o.limit);

    std::ostringstream out;
    for (std::size_t i = 0; i < variables.size(); ++i) out << (i ? "\t" : "") << '?' << variables[i];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
        out << '\n';
    }
    std::cout << out.str();
    std::cerr << rows.size() << " result(s)\n";
    if (!o.out.empty()) {
        const fs::path out_dir(o.out);
        ensure_dir(out_dir);
        write_text_file(out_dir / "query.tsv", out.str());
        write_manifest(app, {"query", files, out_dir, {"query.tsv"}});
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Variant knowledge-graph toolkit: VCF/CADD to RDF, quad-store queries, graph projection and GNN training"};
    app.set_config("--config", "", "Read options from a TOML/INI file");
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.configurable();
    app.fallthrough();
    Options o;
    app.add_option("--threads", o.threads, "Worker threads for file conversion and matrix kernels")
        ->check(CLI::PositiveNumber);

    auto* convert_vcf = app.add_subcommand("convert-vcf", "Convert VCF files to N-Quads, one named graph per accession");
    auto* convert_cadd = app.add_subcommand("convert-cadd", "Convert CADD TSV files to Turtle");
    for (auto* sub : {convert_vcf, convert_cadd}) {
        sub->add_option("inputs", o.inputs, "Files, directories or file-name patterns")->required();
        sub->add_option("--out,-o", o.out, "Output directory")->required();
        sub->add_flag("--strict", o.strict, "Treat any malformed line as fatal for its file");
        sub->add_option("--accession", o.accession, "Accession for a single input (default: file-name stem)");
        sub->add_option("--accession-map", o.accession_map, "File of 'path accession' lines");
    }

    auto* emit = app.add_subcommand("emit-ontology", "Write the ontology as Turtle");
    emit->add_option("--out,-o", o.out, "Output directory")->required();

    auto* build = app.add_subcommand("build", "Load RDF, extract the dataset and write the projected graph");
    build->add_option("inputs", o.inputs, ".nq/.nt/.ttl files, directories or patterns")->required();
    build->add_option("--out,-o", o.out, "Output directory")->required();
    build->add_option("--mode", o.mode, "Edges: variant-id or both (adds same-accession cliques)")
        ->check(CLI::IsMember({"variant-id", "both"}));
    build->add_option("--encoding", o.encoding, "Feature encoding")->check(CLI::IsMember({"onehot", "index"}));
    build->add_option("--seed", o.seed, "Split seed");
    build->add_flag("--stratified", o.stratified, "Stratify the split by class");
    build->add_flag("--drop-accession", o.drop_accession, "Leave the accession out of the features");
    build->add_option("--clique-cap", o.clique_cap, "Largest shared-key group emitted as a clique")
        ->check(CLI::PositiveNumber);
    build->add_option("--split", o.ratios, "train val test ratios")->expected(3)->delimiter(',');
    build->add_option("--vocab-fit", o.vocab_fit, "Fit feature vocabularies on all nodes or train nodes only")
        ->check(CLI::IsMember({"all", "train"}));

    auto* train_cmd = app.add_subcommand("train", "Train one model on a graph file");
    auto* grid_cmd = app.add_subcommand("grid", "Grid search over hidden sizes and learning rates");
    for (auto* sub : {train_cmd, grid_cmd}) {
        sub->add_option("graph", o.graph, "Graph file written by build")->required()->check(CLI::ExistingFile);
        sub->add_option("--out,-o", o.out, "Output directory")->required();
        sub->add_option("--epochs", o.epochs, "Epochs (default: 1500 for lr 0.001, else 1000)");
        sub->add_option("--seed", o.seed, "Weight initialisation seed");
        sub->add_option("--hidden-as", o.hidden_as, "Meaning of --hidden: width or depth")
            ->check(CLI::IsMember({"width", "depth"}));
        sub->add_option("--depth", o.depth, "Graph layers when --hidden is a width")->check(CLI::PositiveNumber);
        sub->add_option("--width", o.width, "Units per layer when --hidden is a depth")->check(CLI::PositiveNumber);
        sub->add_option("--init", o.init, "Weight init: glorot or ones")->check(CLI::IsMember({"glorot", "ones"}));
    }
    train_cmd->add_option("--hidden", o.train_hidden, "Hidden size")->check(CLI::PositiveNumber);
    train_cmd->add_option("--lr", o.train_lr, "Learning rate")->check(CLI::NonNegativeNumber);
    grid_cmd->add_option("--hidden", o.hidden, "Hidden sizes")->delimiter(',');
    grid_cmd->add_option("--lr", o.lr, "Learning rates")->delimiter(',');
    train_cmd->add_option("--model", o.model, "gcn or sage")->required()->check(CLI::IsMember({"gcn", "sage"}));
    train_cmd->add_option("--log-every", o.log_every, "Print progress every N epochs");
    grid_cmd->add_option("--model", o.model, "gcn, sage or both")->check(CLI::IsMember({"gcn", "sage", "both"}));

    auto* query = app.add_subcommand("query", "Match a basic graph pattern against RDF files");
    query->add_option("inputs", o.inputs, ".nq/.nt/.ttl files, directories or patterns")->required();
    query->add_option("--where,-w", o.where, "Pattern 's p o [g]' with ?var variables (repeatable)")->required();
    query->add_option("--limit", o.limit, "Maximum rows");
    query->add_option("--out,-o", o.out, "Also write query.tsv and a manifest here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        kernels::set_num_threads(o.threads);
        if (convert_vcf->parsed()) return run_convert(app, o, "convert-vcf", kVcfExtensions, convert_vcf_file);
        if (convert_cadd->parsed()) return run_convert(app, o, "convert-cadd", kCaddExtensions, convert_cadd_file);
        if (emit->parsed()) return cmd_emit_ontology(app, o);
        if (build->parsed()) return cmd_build(app, o);
        if (train_cmd->parsed()) return cmd_train(app, o);
        if (grid_cmd->parsed()) return cmd_grid(app, o);
        if (query->parsed()) return cmd_query(app, o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const TrainingDiverged& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    std::cerr << "internal error: no subcommand ran\n";
    return kExitInternal;
}
