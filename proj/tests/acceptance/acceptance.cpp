// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "varkg/cadd.hpp"
#include "varkg/genomic_model.hpp"
#include "varkg/gnn_model.hpp"
#include "varkg/grid.hpp"
#include "varkg/loss.hpp"
#include "varkg/projection.hpp"
#include "varkg/quad_store.hpp"
#include "varkg/rdf_emit.hpp"
#include "varkg/rdf_serialize.hpp"
#include "varkg/text_input.hpp"
#include "varkg/train.hpp"
#include "varkg/vcf.hpp"
#include "varkg/vocabulary.hpp"

using namespace varkg;
namespace fs = std::filesystem;

namespace {

/** Collects failed expectations; a criterion passes when none were recorded. */
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failures_.size() < 5) failures_.push_back(what);
        failed_ += !ok;
    }
    /** Measured value reported alongside the verdict. */
    void note(const std::string& what) { notes_.push_back(what); }
    bool ok() const { return failed_ == 0; }
    std::string summary() const {
        std::ostringstream out;
        out << (checks_ - failed_) << "/" << checks_ << " checks";
        for (const auto& n : notes_) out << "; " << n;
        for (const auto& f : failures_) out << "; FAILED " << f;
        return out.str();
    }

private:
    std::size_t checks_ = 0;
    std::size_t failed_ = 0;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

std::string normalize_ws(const std::string& s) {
    std::string out;
    bool space = false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            space = true;
            continue;
        }
        if (space && !out.empty()) out += ' ';
        space = false;
        out += c;
    }
    return out;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

Term iri(std::string_view v) { return Term::iri(std::string(v)); }

oracle::EdgeSet edge_set(const Adjacency& a) {
    oracle::EdgeSet out;
    for (auto e : fixtures::edge_list(a)) out.insert(e);
    return out;
}

GnnModel make_model(ModelKind kind, std::size_t in, std::size_t hidden, std::size_t depth, std::uint64_t seed) {
    ModelConfig c;
    c.kind = kind;
    c.in_dim = in;
    c.hidden_dim = hidden;
    c.depth = depth;
    c.seed = seed;
    GnnModel m(c);
    Rng rng(seed ^ 0x5eed);
    for (auto& p : m.parameters()) {
        if (p.rows() == 1) {
            for (double& b : p.data()) b = uniform_between(rng, -0.5, 0.5);
        }
    }
    return m;
}

// 1. Golden triples for the fixture VCF record and CADD row.
void golden_triples(Checker& c) {
    auto vcf_in = open_text_input(fixtures::data_path("SRR13112995.vcf"));
    auto vcf = parse_vcf(*vcf_in, "SRR13112995");
    c.expect(vcf.records.size() == 1, "fixture VCF has one record");
    if (vcf.records.empty()) return;
    std::ostringstream nq;
    serialize_nquads(variant_to_quads(vcf.records[0], accession_graph("SRR13112995")), nq);
    const std::string origin = "<origin://3a79875ba28c7ef49e6a442460723fdb@0>";
    c.expect(contains(nq.str(), origin +
                                    " <http://biohackathon.org/resource/faldo#position> "
                                    "\"16963\"^^<http://www.w3.org/2001/XMLSchema#integer> <sg://SRR13112995> .\n"),
             "FALDO position quad");
    c.expect(contains(nq.str(), origin +
                                    " <sg://0.99.11/vcf2rdf/variant/REF> <sg://0.99.11/vcf2rdf/sequence/G> "
                                    "<sg://SRR13112995> .\n"),
             "REF quad line");

    auto cadd_in = open_text_input(fixtures::data_path("SRR13112995.tsv"));
    auto cadd = parse_cadd_tsv(*cadd_in);
    c.expect(cadd.records.size() == 1, "fixture CADD has one row");
    if (cadd.records.empty()) return;
    std::ostringstream ttl;
    serialize_turtle(cadd_to_triples(cadd.records[0], "SRR13112995", 1), vocab::default_prefixes(), ttl);
    const std::string block =
        "<http://sg.org/SRR13112995/1/variant1> a ns1:variant ;\n"
        "    ns1:has_alt_genome \"A\" ;\n"
        "    ns1:has_cadd_scores <http://sg.org/SRR13112995/1/variant1/cadd> ;\n"
        "    ns1:has_pos 16963 ;\n"
        "    ns1:has_ref_genome \"G\" .\n"
        "<http://sg.org/SRR13112995/1/variant1/cadd> a ns1:CADD ;\n"
        "    ns1:phred 12.72 ;\n"
        "    ns1:raw_score 0.900784 .\n";
    c.expect(contains(normalize_ws(ttl.str()), normalize_ws(block)), "CADD Turtle block");
    c.expect(contains(ttl.str(), "@prefix ns1: <http://sg.org/> ."), "ns1 prefix");
}

// 2. Every row of the ontology table is present.
void ontology_completeness(Checker& c) {
    using namespace vocab;
    const auto onto = emit_ontology();
    struct Row {
        std::string_view s, p, o;
    };
    const std::vector<Row> rows = {
        {kChromosome, kRdfType, kWikidataChromosome},
        {kChromosome, kRdfsSubClassOf, kWikidataChromosome},
        {kHasChromosomeNumber, kRdfType, kRdfProperty},
        {kHasChromosomeNumber, kRdfsDomain, kChromosome},
        {kHasChromosomeNumber, kRdfsRange, kChromosomeNumber},
        {kChromosomeNumber, kRdfType, kRdfsClass},
        {kHasNumber, kRdfType, kRdfProperty},
        {kHasNumber, kRdfsDomain, kChromosomeNumber},
        {kHasNumber, kRdfsRange, kXsdInt},
        {kVariant, kRdfType, kRdfsClass},
        {kHasVariant, kRdfType, kRdfProperty},
        {kHasVariant, kRdfsDomain, kChromosome},
        {kHasVariant, kRdfsRange, kVariant},
        {kHasPos, kRdfType, kRdfProperty},
        {kHasPos, kRdfsDomain, kVariant},
        {kHasPos, kRdfsRange, kXsdInt},
        {kHasRefGenome, kRdfType, kRdfProperty},
        {kHasRefGenome, kRdfsDomain, kVariant},
        {kHasRefGenome, kRdfsRange, kXsdString},
        {kHasAltGenome, kRdfType, kRdfProperty},
        {kHasAltGenome, kRdfsDomain, kVariant},
        {kHasAltGenome, kRdfsRange, kXsdString},
        {kCadd, kRdfType, kRdfsClass},
        {kHasCaddScores, kRdfType, kRdfProperty},
        {kHasCaddScores, kRdfsDomain, kVariant},
        {kHasCaddScores, kRdfsRange, kCadd},
        {kRawScore, kRdfType, kRdfProperty},
        {kRawScore, kRdfsDomain, kCadd},
        {kRawScore, kRdfsRange, kXsdLong},
        {kPhred, kRdfType, kRdfProperty},
        {kPhred, kRdfsDomain, kCadd},
        {kPhred, kRdfsRange, kXsdLong},
    };
    for (const auto& r : rows) {
        const Quad q{iri(r.s), iri(r.p), iri(r.o), std::nullopt};
        c.expect(std::find(onto.begin(), onto.end(), q) != onto.end(), to_string(q));
    }
}

// 3. Binning on the boundary set.
void binning(Checker& c) {
    const std::vector<std::pair<double, int>> cases = {{-1, 0}, {0, 1},    {0.5, 1}, {1, 2},  {4.99, 2},
                                                       {5, 3},  {9.99, 3}, {10, 4},  {99, 4}, {150, 4},
                                                       {0.900784, 1}};
    for (auto [raw, expected] : cases) {
        const int got = bin_cadd_score(raw).value;
        c.expect(got == expected, "bin(" + format_real(raw) + ") = " + std::to_string(got));
    }
}

// 4. Store matching against the brute-force enumerator.
void store_oracle(Checker& c) {
    Rng rng(4004);
    for (int trial = 0; trial < 50; ++trial) {
        auto quads = fixtures::random_quads(rng, 1 + uniform_below(rng, 1000));
        QuadStore store;
        store.insert(quads);
        auto patterns = fixtures::random_patterns(rng, 4);
        auto got = store.match(patterns);
        std::sort(got.begin(), got.end());
        c.expect(got == oracle::brute_force_match(quads, patterns), "trial " + std::to_string(trial));
    }
}

// 5. Projection edges and components against brute-force predicates.
void projection_oracle(Checker& c) {
    Rng rng(5005);
    for (int trial = 0; trial < 50; ++trial) {
        auto rows = fixtures::random_rows(rng, 1 + uniform_below(rng, 500));
        for (bool both : {false, true}) {
            ProjectionOptions opts;
            opts.mode = both ? ProjectionMode::variant_id_and_accession : ProjectionMode::variant_id;
            auto p = build_projection(rows, opts);
            const auto expected = oracle::projection_edges(p.nodes, both);
            const auto got = edge_set(p.graph.adjacency);
            c.expect(got == expected, "edges, trial " + std::to_string(trial));
            oracle::UnionFind ours(p.nodes.size()), theirs(p.nodes.size());
            for (auto [u, v] : got) ours.unite(u, v);
            for (auto [u, v] : expected) theirs.unite(u, v);
            c.expect(ours.labels() == theirs.labels(), "components, trial " + std::to_string(trial));
        }
    }
}

// 6. Gradients, forward oracles, uniform loss, permutation equivariance.
void gnn_numerics(Checker& c) {
    Rng rng(6006);
    double worst_grad = 0.0, worst_forward = 0.0, worst_perm = 0.0;
    for (int trial = 0; trial < 6; ++trial) {
        auto g = fixtures::random_graph(rng, 4 + uniform_below(rng, 7), 3, 0.35);
        auto ops = GraphOperators::from(g.adjacency);
        auto mask = g.mask(Split::train);
        for (auto kind : {ModelKind::gcn, ModelKind::sage}) {
            auto model = make_model(kind, 3, 4, 2, 60 + trial);
            ForwardCache cache;
            auto logits = model.forward(ops, g.features, &cache);
            auto grads = model.backward(ops, cache, softmax_cross_entropy(logits, g.labels, mask).grad);
            auto loss_of = [&] { return softmax_cross_entropy(model.forward(ops, g.features), g.labels, mask).loss; };
            for (std::size_t i = 0; i < grads.size(); ++i) {
                auto numeric = oracle::central_difference(model.parameters()[i], loss_of, 1e-5);
                worst_grad = std::max(worst_grad, oracle::max_relative_error(grads[i], numeric));
            }
            auto nbrs = oracle::neighbor_lists(g.num_nodes(), edge_set(g.adjacency));
            auto expected = kind == ModelKind::gcn ? oracle::gcn_per_node(model.parameters(), 2, nbrs, g.features)
                                                   : oracle::sage_per_node(model.parameters(), 2, nbrs, g.features);
            auto direct = kind == ModelKind::gcn ? gcn_forward(model, normalized_adjacency(g.adjacency), g.features)
                                                 : sage_forward(model, g.adjacency, g.features);
            worst_forward = std::max(worst_forward, max_abs_diff(direct, expected));
        }
    }
    c.expect(worst_grad < 1e-4, "gradient relative error " + std::to_string(worst_grad));
    c.expect(worst_forward <= 1e-12, "forward difference " + std::to_string(worst_forward));

    std::vector<int> labels = {0, 1, 2, 3, 4};
    auto uniform = softmax_cross_entropy(DenseMatrix(5, 5, 0.25), labels, std::vector<std::uint8_t>(5, 1));
    c.expect(std::abs(uniform.loss - std::log(5.0)) <= 1e-12, "uniform loss " + format_real(uniform.loss));

    for (int trial = 0; trial < 10; ++trial) {
        auto g = fixtures::random_graph(rng, 8, 3, 0.4);
        std::vector<std::uint32_t> perm(8);
        std::iota(perm.begin(), perm.end(), 0u);
        shuffle(std::span<std::uint32_t>(perm), rng);
        std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
        for (auto [u, v] : fixtures::edge_list(g.adjacency)) pairs.emplace_back(perm[u], perm[v]);
        auto padj = Adjacency::from_pairs(8, pairs);
        DenseMatrix px(8, 3);
        for (std::size_t v = 0; v < 8; ++v) {
            for (std::size_t k = 0; k < 3; ++k) px(perm[v], k) = g.features(v, k);
        }
        for (auto kind : {ModelKind::gcn, ModelKind::sage}) {
            auto m = make_model(kind, 3, 5, 2, 90 + trial);
            auto a = m.forward(GraphOperators::from(g.adjacency), g.features);
            auto b = m.forward(GraphOperators::from(padj), px);
            for (std::size_t v = 0; v < 8; ++v) {
                for (std::size_t o = 0; o < a.cols(); ++o) {
                    worst_perm = std::max(worst_perm, std::abs(a(v, o) - b(perm[v], o)));
                }
            }
        }
    }
    c.expect(worst_perm <= 1e-10, "permutation difference " + std::to_string(worst_perm));
    std::ostringstream note;
    note << std::scientific << std::setprecision(1) << "max grad rel err " << worst_grad << ", forward diff "
         << worst_forward << ", permutation diff " << worst_perm;
    c.note(note.str());
}

// 7. Learning sanity on the propagated-label graph.
void learning_sanity(Checker& c) {
    const std::uint64_t seed = 20231016;
    auto g = fixtures::propagated_label_graph(200, seed);
    for (auto kind : {ModelKind::gcn, ModelKind::sage}) {
        ModelConfig mc;
        mc.kind = kind;
        mc.in_dim = g.features.cols();
        mc.hidden_dim = 16;
        mc.seed = seed;
        TrainConfig tc;
        tc.learning_rate = 0.01;
        tc.epochs = 300;
        auto run = train(g, mc, tc);
        auto again = train(g, mc, tc);
        const double train_acc = evaluate(run.model, g, Split::train).accuracy;
        const double test_acc = evaluate(run.model, g, Split::test).accuracy;
        const std::string name = to_string(kind);
        c.note(name + " train " + format_percent(train_acc) + "% test " + format_percent(test_acc) + "%");
        c.expect(train_acc >= 0.99, name + " train " + format_percent(train_acc));
        c.expect(test_acc >= 0.90, name + " test " + format_percent(test_acc));
        c.expect(run.history == again.history && run.model.parameters() == again.model.parameters(),
                 name + " deterministic");
    }
}

// 8. TEST only on each kind's best-VAL cell; confusion rows sum to class counts.
void protocol_fidelity(Checker& c) {
    auto g = fixtures::propagated_label_graph(120, 8008);
    GridConfig config;
    config.epochs = 40;
    config.seed = 8;
    auto result = grid_search(g, config);
    c.expect(result.cells.size() == 16, "16 cells");

    for (std::size_t k = 0; k < config.kinds.size(); ++k) {
        std::optional<std::size_t> best;
        std::size_t with_test = 0;
        for (std::size_t i = 0; i < result.cells.size(); ++i) {
            const auto& cell = result.cells[i];
            if (cell.kind != config.kinds[k]) continue;
            with_test += cell.test.has_value();
            if (!best || cell.val_accuracy > result.cells[*best].val_accuracy) best = i;
        }
        const auto name = to_string(config.kinds[k]);
        c.expect(with_test == 1, name + " has exactly one TEST entry");
        c.expect(best && result.cells[*best].test.has_value(), name + " TEST on the best-VAL cell");
        if (!best || !result.cells[*best].test) continue;
        const Metrics& m = *result.cells[*best].test;
        std::array<std::int64_t, kNumCaddCategories> counts{};
        for (std::size_t v = 0; v < g.num_nodes(); ++v) {
            if (g.split[v] == Split::test) ++counts[static_cast<std::size_t>(g.labels[v])];
        }
        for (std::size_t t = 0; t < counts.size(); ++t) {
            const auto row = std::accumulate(m.confusion[t].begin(), m.confusion[t].end(), std::int64_t{0});
            c.expect(row == counts[t], name + " confusion row " + std::to_string(t));
        }
    }

    // Rendered table: a VAL figure in every row, a TEST figure exactly once per kind.
    std::istringstream table(format_grid_table(config, result));
    std::string line;
    std::size_t value_rows = 0, test_figures = 0;
    while (std::getline(table, line)) {
        std::istringstream fields(line);
        std::vector<std::string> f;
        for (std::string x; fields >> x;) f.push_back(x);
        if (f.size() != 5 || f[0] == "HL") continue;
        ++value_rows;
        c.expect(f[1] != "-" && f[3] != "-", "VAL present in row " + line);
        test_figures += (f[2] != "-") + (f[4] != "-");
    }
    c.expect(value_rows == 8, "8 table rows");
    c.expect(test_figures == 2, "two TEST figures in the table");
}

// 9. End-to-end CLI pipeline, twice, byte-identical.
void pipeline_end_to_end(Checker& c) {
    const fs::path corpus = fixtures::data_path("corpus");
    std::vector<std::unique_ptr<fixtures::ScratchDir>> runs;
    for (int run = 0; run < 2; ++run) {
        runs.push_back(std::make_unique<fixtures::ScratchDir>("accept"));
        const auto& dir = *runs.back();
        fs::copy(corpus, dir / "corpus", fs::copy_options::recursive);
        const std::vector<std::string> steps = {
            "convert-vcf corpus/vcf --out rdf",
            "convert-cadd corpus/cadd --out rdf",
            "build rdf --out graph --seed 7",
            "grid graph/graph.bin --out grid --seed 7",
        };
        for (const auto& step : steps) {
            auto r = fixtures::run_cli(step, dir.path());
            c.expect(r.exit_code == 0, "run " + std::to_string(run) + ": '" + step + "' exit " +
                                           std::to_string(r.exit_code) + " " + r.err.substr(0, 200));
        }
    }
    std::size_t compared = 0;
    for (const char* sub : {"rdf", "graph", "grid"}) {
        for (const auto& entry : fs::recursive_directory_iterator(*runs[0] / sub)) {
            if (!entry.is_regular_file()) continue;
            const auto rel = fs::relative(entry.path(), runs[0]->path());
            const auto other = runs[1]->path() / rel;
            c.expect(fs::exists(other) && fixtures::read_file(entry.path()) == fixtures::read_file(other),
                     "identical " + rel.string());
            ++compared;
        }
    }
    c.expect(compared >= 20, std::to_string(compared) + " files compared");
    auto dataset = fixtures::read_file(*runs[0] / "graph/dataset.tsv");
    c.expect(!dataset.empty(), "dataset written");
}

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;  // 0 = no runtime bound
    std::function<void(Checker&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "golden triples", 1.0, golden_triples},
        {2, "ontology completeness", 0.0, ontology_completeness},
        {3, "CADD binning", 0.0, binning},
        {4, "store oracle", 30.0, store_oracle},
        {5, "projection oracle", 30.0, projection_oracle},
        {6, "GNN numerics", 0.0, gnn_numerics},
        {7, "learning sanity", 60.0, learning_sanity},
        {8, "protocol fidelity", 0.0, protocol_fidelity},
        {9, "pipeline end-to-end", 120.0, pipeline_end_to_end},
    };
    int failed = 0;
    for (const auto& criterion : criteria) {
        Checker checker;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(checker);
        } catch (const std::exception& e) {
            checker.expect(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.budget_seconds > 0) {
            checker.expect(seconds < criterion.budget_seconds,
                           "runtime over " + format_real(criterion.budget_seconds) + " s");
        }
        failed += !checker.ok();
        std::cout << (checker.ok() ? "PASS" : "FAIL") << " criterion " << criterion.id << " (" << criterion.name
                  << ", " << std::fixed << std::setprecision(2) << seconds << " s): " << checker.summary()
                  << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
