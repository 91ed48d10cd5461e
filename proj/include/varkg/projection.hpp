#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "varkg/dataset.hpp"
#include "varkg/dense_matrix.hpp"

namespace varkg {

enum class ProjectionMode {
    variant_id,                // edges between accessions sharing a variant key
    variant_id_and_accession,  // plus cliques within each accession
};

enum class Split : std::uint8_t { none = 0, train = 1, val = 2, test = 3 };

struct NodeMeta {
    std::string accession;
    std::string variant_key;

    bool operator==(const NodeMeta&) const = default;
};

/** Symmetric, loop-free adjacency; neighbor lists sorted ascending. */
struct Adjacency {
    std::vector<std::size_t> offsets{0};
    std::vector<std::uint32_t> neighbors;

    std::size_t num_nodes() const { return offsets.size() - 1; }
    std::size_t degree(std::size_t v) const { return offsets[v + 1] - offsets[v]; }
    std::span<const std::uint32_t> neighbors_of(std::size_t v) const {
        return {neighbors.data() + offsets[v], degree(v)};
    }
    std::size_t num_undirected_edges() const { return neighbors.size() / 2; }

    /** Builds CSR from undirected pairs (u != v; duplicates and order ignored). */
    static Adjacency from_pairs(std::size_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs);

    bool operator==(const Adjacency&) const = default;
};

/**
 * Node-classification graph. Node i has features.row(i), labels[i] (0..4 or
 * -1 when unlabeled) and split[i]; labeled nodes sit in exactly one split.
 */
struct ProjectionGraph {
    Adjacency adjacency;
    DenseMatrix features;
    std::vector<int> labels;
    std::vector<Split> split;
    std::vector<NodeMeta> node_meta;

    std::size_t num_nodes() const { return node_meta.size(); }
    std::vector<std::uint8_t> mask(Split which) const;

    bool operator==(const ProjectionGraph&) const = default;
};

struct ProjectionOptions {
    ProjectionMode mode = ProjectionMode::variant_id;
    /** Groups larger than this become a star around their first node. */
    std::size_t clique_cap = 1024;
};

struct ProjectionResult {
    ProjectionGraph graph;            // adjacency + node_meta filled; features/labels empty
    std::vector<DatasetRow> nodes;    // representative row per node, same order
    std::vector<std::string> warnings;
};

/**
 * One row per (accession, variant_key), keeping the first row seen for each
 * (i.e. the first ANN annotation). Output sorted by (accession, variant_key).
 */
std::vector<DatasetRow> dedupe_nodes(std::span<const DatasetRow> rows);

ProjectionResult build_projection(std::span<const DatasetRow> rows, const ProjectionOptions& options = {});

/** bin_cadd_score of the raw score, or -1 when the row has none. */
std::vector<int> assign_labels(std::span<const DatasetRow> rows);

struct SplitRatios {
    double train = 0.6;
    double val = 0.2;
    double test = 0.2;
};

struct SplitResult {
    std::vector<Split> split;
    std::vector<std::string> warnings;
};

/**
 * Seeded partition of the labeled nodes. Sizes per group are
 * round(n*train), round(n*val) (capped), rest to test. In stratified mode each
 * class with at least 3 nodes is split on its own; smaller classes are pooled
 * and split together (with a warning).
 */
SplitResult split_masks(std::span<const int> labels, const SplitRatios& ratios, std::uint64_t seed,
                        bool stratified);

}  // namespace varkg
