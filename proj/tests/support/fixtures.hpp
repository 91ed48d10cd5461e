#pragma once

// Shared test helpers: fixture paths, scratch directories, CLI runner and
// synthetic generators.

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "varkg/dataset.hpp"
#include "varkg/dense_matrix.hpp"
#include "varkg/projection.hpp"
#include "varkg/quad_store.hpp"
#include "varkg/random.hpp"

namespace varkg {

/** Readable gtest output for terms and quads. */
inline void PrintTo(const Term& t, std::ostream* os) { *os << to_string(t); }
inline void PrintTo(const Quad& q, std::ostream* os) { *os << to_string(q); }
inline void PrintTo(const DenseMatrix& m, std::ostream* os) {
    *os << m.rows() << "x" << m.cols() << " {";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        *os << (r ? ", {" : "{");
        for (std::size_t c = 0; c < m.cols(); ++c) *os << (c ? ", " : "") << m(r, c);
        *os << "}";
    }
    *os << "}";
}

}  // namespace varkg

namespace fixtures {

namespace fs = std::filesystem;

fs::path data_path(const std::string& name);
std::string read_file(const fs::path& path);
void write_file(const fs::path& path, const std::string& content);

/** Fresh directory under the system temp dir, removed on destruction. */
class ScratchDir {
public:
    explicit ScratchDir(const std::string& tag);
    ~ScratchDir();
    ScratchDir(const ScratchDir&) = delete;
    ScratchDir& operator=(const ScratchDir&) = delete;
    const fs::path& path() const { return path_; }
    fs::path operator/(const std::string& name) const { return path_ / name; }

private:
    fs::path path_;
};

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

/** Runs the varkg executable with `args` (already shell-quoted where needed) inside `cwd`. */
CliResult run_cli(const std::string& args, const fs::path& cwd);

std::string shell_quote(const std::string& s);

/** Random quads over small term pools so that joins hit often. */
std::vector<varkg::Quad> random_quads(varkg::Rng& rng, std::size_t count);

/** Random conjunctive pattern list (1..max_patterns) over the same pools; variables ?v0..?v3. */
std::vector<varkg::Pattern> random_patterns(varkg::Rng& rng, std::size_t max_patterns);

/** Random dataset rows: `n` rows across few accessions with frequently shared variant keys. */
std::vector<varkg::DatasetRow> random_rows(varkg::Rng& rng, std::size_t n);

/**
 * Synthetic node-classification graph: 4-cliques of nodes. In every clique
 * one or two "source" nodes carry a one-hot marker of the clique's class in
 * feature columns 0..4; the rest carry zeros there. All nodes of a clique
 * share the class, so the label is a deterministic function of a one-hot
 * feature propagated to neighbors. Column 5 is a constant 1. Split 60/20/20
 * via split_masks with `seed`.
 */
varkg::ProjectionGraph propagated_label_graph(std::size_t n_nodes, std::uint64_t seed);

/** Small random graph with random features and all nodes labeled and split. */
varkg::ProjectionGraph random_graph(varkg::Rng& rng, std::size_t n_nodes, std::size_t n_features,
                                    double edge_probability);

/** Edges (u < v) of an adjacency. */
std::vector<std::pair<std::size_t, std::size_t>> edge_list(const varkg::Adjacency& adjacency);

}  // namespace fixtures
