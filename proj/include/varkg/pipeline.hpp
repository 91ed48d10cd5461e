#pragma once

// File-level steps behind the command-line tool.

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "varkg/dataset.hpp"
#include "varkg/features.hpp"
#include "varkg/genomic_model.hpp"
#include "varkg/parse_common.hpp"
#include "varkg/projection.hpp"
#include "varkg/quad_store.hpp"

namespace varkg {

namespace fs = std::filesystem;

/**
 * Resolves input specs to a sorted, de-duplicated file list. A spec is a
 * file, a directory (its files whose names end in one of `extensions`), or a
 * pattern with * ? [ ] in the file-name part. A missing plain path throws
 * InputError; a pattern or directory with no matches contributes nothing.
 */
std::vector<fs::path> expand_inputs(std::span<const std::string> specs, std::span<const std::string> extensions);

/** path -> accession, read from lines "path<TAB or spaces>accession"; '#' starts a comment. */
class AccessionMap {
public:
    static AccessionMap load(const fs::path& path);
    void add(const fs::path& path, std::string accession);
    std::optional<std::string> find(const fs::path& path) const;
    bool empty() const { return by_path_.empty(); }

private:
    std::map<std::string, std::string> by_path_;
    std::map<std::string, std::string> by_name_;
};

/** Per-file conversion outcome. */
struct FileReport {
    fs::path input;
    fs::path output;
    std::string accession;
    std::size_t records = 0;
    std::size_t statements = 0;
    std::vector<ParseDiagnostic> diagnostics;
    std::optional<std::string> failure;  // set when the file could not be converted

    std::size_t count(Severity severity) const;
    std::string summary() const;
};

/** Streams one VCF into `<out_dir>/<accession>.nq`; partial output is removed on failure. */
FileReport convert_vcf_file(const fs::path& input, const fs::path& out_dir, const std::string& accession,
                            ParseOptions options);

/** Converts one CADD TSV into `<out_dir>/<accession>.ttl`. */
FileReport convert_cadd_file(const fs::path& input, const fs::path& out_dir, const std::string& accession,
                             ParseOptions options);

/** Loads every file into one store (file order as given). */
QuadStore load_store(std::span<const fs::path> inputs);

struct BuildOptions {
    ProjectionOptions projection;
    Encoding encoding = Encoding::onehot;
    SplitRatios ratios;
    std::uint64_t seed = 0;
    bool stratified = false;
    bool include_accession = true;
    std::string vocab_fit = "all";  // "all" or "train"
};

struct BuildOutput {
    std::vector<DatasetRow> rows;   // full extracted dataset
    ProjectionGraph graph;
    std::vector<DatasetRow> nodes;  // representative row per node
    FeatureVocab vocab;
    std::vector<std::string> warnings;

    std::size_t labeled() const;
    /** Count of labeled nodes per class. */
    std::array<std::size_t, kNumCaddCategories> label_counts() const;
};

BuildOutput build_graph(const QuadStore& store, const BuildOptions& options);

/** Lowercase hex MD5 of a file's bytes, read in chunks. */
std::string md5_file(const fs::path& path);

/** "N nodes, E undirected edge(s)". */
std::string graph_summary(const ProjectionGraph& graph);

}  // namespace varkg
