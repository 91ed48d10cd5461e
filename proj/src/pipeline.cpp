#include "varkg/pipeline.hpp"

#include <fnmatch.h>
#include <openssl/evp.h>

#include <algorithm>
#include <memory>
#include <fstream>
#include <set>
#include <sstream>

#include "varkg/cadd.hpp"
#include "varkg/error.hpp"
#include "varkg/rdf_emit.hpp"
#include "varkg/rdf_load.hpp"
#include "varkg/rdf_serialize.hpp"
#include "varkg/text_input.hpp"
#include "varkg/vcf.hpp"
#include "varkg/vocabulary.hpp"

namespace varkg {

namespace {

bool has_wildcard(std::string_view s) { return s.find_first_of("*?[") != std::string_view::npos; }

bool has_extension(const std::string& name, std::span<const std::string> extensions) {
    return std::any_of(extensions.begin(), extensions.end(),
                       [&](const std::string& ext) { return name.size() > ext.size() && name.ends_with(ext); });
}

std::vector<fs::path> regular_files_in(const fs::path& dir) {
    std::vector<fs::path> out;
    std::error_code ec;
    fs::directory_iterator it(dir, ec);
    if (ec) throw InputError("cannot list " + dir.string() + ": " + ec.message());
    for (const auto& entry : it) {
        if (entry.is_regular_file()) out.push_back(entry.path());
    }
    return out;
}

}  // namespace

std::vector<fs::path> expand_inputs(std::span<const std::string> specs, std::span<const std::string> extensions) {
    std::set<fs::path> found;
    for (const auto& spec : specs) {
        fs::path p(spec);
        const std::string name = p.filename().string();
        if (has_wildcard(name)) {
            if (has_wildcard(p.parent_path().string())) {
                throw InputError("wildcards are only supported in the file name: " + spec);
            }
            fs::path dir = p.parent_path().empty() ? fs::path(".") : p.parent_path();
            if (!fs::is_directory(dir)) continue;
            for (const auto& f : regular_files_in(dir)) {
                if (fnmatch(name.c_str(), f.filename().c_str(), FNM_PERIOD) == 0) {
                    found.insert(p.parent_path().empty() ? f.filename() : f);
                }
            }
        } else if (fs::is_directory(p)) {
            for (const auto& f : regular_files_in(p)) {
                if (has_extension(f.filename().string(), extensions)) found.insert(f);
            }
        } else if (fs::exists(p)) {
            found.insert(p);
        } else {
            throw InputError("no such file: " + spec);
        }
    }
    return {found.begin(), found.end()};
}

AccessionMap AccessionMap::load(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open accession map " + path.string());
    AccessionMap map;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto text = trim(chomp(line));
        if (text.empty() || text.front() == '#') continue;
        auto fields = split_columns(text, 2);
        if (fields.size() != 2) {
            throw ParseError(number, "accession map line needs 'path accession': " + path.string());
        }
        map.add(fs::path(std::string(fields[0])), std::string(fields[1]));
    }
    return map;
}

void AccessionMap::add(const fs::path& path, std::string accession) {
    by_path_[fs::weakly_canonical(path).string()] = accession;
    by_name_[path.filename().string()] = std::move(accession);
}

std::optional<std::string> AccessionMap::find(const fs::path& path) const {
    if (auto it = by_path_.find(fs::weakly_canonical(path).string()); it != by_path_.end()) return it->second;
    if (auto it = by_name_.find(path.filename().string()); it != by_name_.end()) return it->second;
    return std::nullopt;
}

std::size_t FileReport::count(Severity severity) const {
    return static_cast<std::size_t>(std::count_if(diagnostics.begin(), diagnostics.end(),
                                                  [&](const auto& d) { return d.severity == severity; }));
}

std::string FileReport::summary() const {
    std::ostringstream out;
    out << input.string() << ": ";
    if (failure) {
        out << "FAILED: " << *failure;
    } else {
        out << records << " records, " << statements << " statements, " << count(Severity::warning)
            << " warnings, " << count(Severity::error) << " errors -> " << output.string();
    }
    return out.str();
}

namespace {

template <typename Body>
FileReport convert_guarded(const fs::path& input, const fs::path& output, const std::string& accession, Body body) {
    FileReport report;
    report.input = input;
    report.output = output;
    report.accession = accession;
    try {
        body(report);
    } catch (const InputError& e) {
        report.failure = e.what();
    }
    if (report.failure) {
        std::error_code ec;
        fs::remove(output, ec);
    }
    return report;
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + path.string());
    return out;
}

}  // namespace

FileReport convert_vcf_file(const fs::path& input, const fs::path& out_dir, const std::string& accession,
                            ParseOptions options) {
    return convert_guarded(input, out_dir / (accession + ".nq"), accession, [&](FileReport& report) {
        auto in = open_text_input(input);
        VcfReader reader(*in, accession, options);
        auto out = open_output(report.output);
        const Term graph = accession_graph(accession);
        while (auto record = reader.next()) {
            auto quads = variant_to_quads(*record, graph);
            report.statements += serialize_nquads(quads, out);
            ++report.records;
        }
        report.diagnostics = reader.diagnostics();
        out.flush();
        if (!out) throw InputError("write failed: " + report.output.string());
    });
}

FileReport convert_cadd_file(const fs::path& input, const fs::path& out_dir, const std::string& accession,
                             ParseOptions options) {
    return convert_guarded(input, out_dir / (accession + ".ttl"), accession, [&](FileReport& report) {
        auto in = open_text_input(input);
        CaddReader reader(*in, options);
        CaddOrdinals ordinals;
        const auto prefixes = vocab::default_prefixes();
        auto out = open_output(report.output);
        write_turtle_prefixes(prefixes, out);
        // Each row has its own subjects, so rows can be written one at a time.
        while (auto record = reader.next()) {
            auto block = cadd_to_triples(*record, accession, ordinals.next(record->chrom));
            report.statements += write_turtle_blocks(block, prefixes, out);
            ++report.records;
        }
        report.diagnostics = reader.diagnostics();
        out.flush();
        if (!out) throw InputError("write failed: " + report.output.string());
    });
}

QuadStore load_store(std::span<const fs::path> inputs) {
    QuadStore store;
    for (const auto& path : inputs) {
        try {
            auto quads = load_rdf_file(path);
            store.insert(quads);
        } catch (const InputError& e) {
            throw InputError(path.string() + ": " + e.what());
        }
    }
    return store;
}

std::size_t BuildOutput::labeled() const {
    return static_cast<std::size_t>(std::count_if(graph.labels.begin(), graph.labels.end(), [](int l) { return l >= 0; }));
}

std::array<std::size_t, kNumCaddCategories> BuildOutput::label_counts() const {
    std::array<std::size_t, kNumCaddCategories> counts{};
    for (int l : graph.labels) {
        if (l >= 0) ++counts[static_cast<std::size_t>(l)];
    }
    return counts;
}

BuildOutput build_graph(const QuadStore& store, const BuildOptions& options) {
    if (options.vocab_fit != "all" && options.vocab_fit != "train") {
        throw std::invalid_argument("vocabulary fit must be 'all' or 'train'");
    }
    BuildOutput out;
    out.rows = extract_dataset(store);
    auto projection = build_projection(out.rows, options.projection);
    out.graph = std::move(projection.graph);
    out.nodes = std::move(projection.nodes);
    out.warnings = std::move(projection.warnings);

    out.graph.labels = assign_labels(out.nodes);
    auto split = split_masks(out.graph.labels, options.ratios, options.seed, options.stratified);
    out.graph.split = std::move(split.split);
    out.warnings.insert(out.warnings.end(), split.warnings.begin(), split.warnings.end());

    if (options.vocab_fit == "train") {
        std::vector<DatasetRow> visible;
        for (std::size_t i = 0; i < out.nodes.size(); ++i) {
            if (out.graph.split[i] == Split::train) visible.push_back(out.nodes[i]);
        }
        out.vocab = FeatureVocab::fit(visible, options.include_accession, "train");
    } else {
        out.vocab = FeatureVocab::fit(out.nodes, options.include_accession, "all");
    }
    out.graph.features = encode_features(out.nodes, out.vocab, options.encoding);
    return out;
}

std::string graph_summary(const ProjectionGraph& graph) {
    const auto e = graph.adjacency.num_undirected_edges();
    return std::to_string(graph.num_nodes()) + (graph.num_nodes() == 1 ? " node, " : " nodes, ") +
           std::to_string(e) + (e == 1 ? " undirected edge" : " undirected edges");
}

std::string md5_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_md5(), nullptr) != 1) throw std::runtime_error("MD5 init failed");
    std::vector<char> buf(1 << 16);
    while (in) {
        in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx.get(), digest, &len);
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
        out += kHex[digest[i] >> 4];
        out += kHex[digest[i] & 0xf];
    }
    return out;
}

}  // namespace varkg
