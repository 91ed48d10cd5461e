#include "varkg/projection.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "varkg/genomic_model.hpp"
#include "varkg/random.hpp"

namespace varkg {

Adjacency Adjacency::from_pairs(std::size_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> directed;
    directed.reserve(pairs.size() * 2);
    for (auto [u, v] : pairs) {
        if (u == v) continue;
        if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
        directed.emplace_back(u, v);
        directed.emplace_back(v, u);
    }
    std::sort(directed.begin(), directed.end());
    directed.erase(std::unique(directed.begin(), directed.end()), directed.end());
    Adjacency adj;
    adj.offsets.assign(n + 1, 0);
    adj.neighbors.reserve(directed.size());
    for (auto [u, v] : directed) {
        ++adj.offsets[u + 1];
        adj.neighbors.push_back(v);
    }
    for (std::size_t i = 0; i < n; ++i) adj.offsets[i + 1] += adj.offsets[i];
    return adj;
}

std::vector<std::uint8_t> ProjectionGraph::mask(Split which) const {
    std::vector<std::uint8_t> m(split.size(), 0);
    for (std::size_t i = 0; i < split.size(); ++i) m[i] = split[i] == which ? 1 : 0;
    return m;
}

std::vector<DatasetRow> dedupe_nodes(std::span<const DatasetRow> rows) {
    std::map<std::pair<std::string, std::string>, const DatasetRow*> first;
    for (const auto& r : rows) first.try_emplace({r.accession, r.variant_key}, &r);
    std::vector<DatasetRow> out;
    out.reserve(first.size());
    for (const auto& [key, row] : first) out.push_back(*row);
    return out;
}

namespace {

void connect_group(const std::vector<std::uint32_t>& group, std::size_t cap, const std::string& what,
                   std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs,
                   std::vector<std::string>& warnings) {
    if (group.size() < 2) return;
    if (group.size() > cap) {
        warnings.push_back(what + " shared by " + std::to_string(group.size()) + " nodes exceeds cap " +
                           std::to_string(cap) + "; connected as a star");
        for (std::size_t i = 1; i < group.size(); ++i) pairs.emplace_back(group[0], group[i]);
        return;
    }
    for (std::size_t i = 0; i < group.size(); ++i) {
        for (std::size_t j = i + 1; j < group.size(); ++j) pairs.emplace_back(group[i], group[j]);
    }
}

}  // namespace

ProjectionResult build_projection(std::span<const DatasetRow> rows, const ProjectionOptions& options) {
    ProjectionResult result;
    result.nodes = dedupe_nodes(rows);
    const std::size_t n = result.nodes.size();

    std::map<std::string, std::vector<std::uint32_t>> by_key, by_accession;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& r = result.nodes[i];
        result.graph.node_meta.push_back({r.accession, r.variant_key});
        by_key[r.variant_key].push_back(static_cast<std::uint32_t>(i));
        by_accession[r.accession].push_back(static_cast<std::uint32_t>(i));
    }

    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (const auto& [key, group] : by_key) {
        connect_group(group, options.clique_cap, "variant key '" + key + "'", pairs, result.warnings);
    }
    if (options.mode == ProjectionMode::variant_id_and_accession) {
        for (const auto& [acc, group] : by_accession) {
            connect_group(group, options.clique_cap, "accession '" + acc + "'", pairs, result.warnings);
        }
    }
    result.graph.adjacency = Adjacency::from_pairs(n, std::move(pairs));
    result.graph.labels.assign(n, -1);
    result.graph.split.assign(n, Split::none);
    return result;
}

std::vector<int> assign_labels(std::span<const DatasetRow> rows) {
    std::vector<int> labels;
    labels.reserve(rows.size());
    for (const auto& r : rows) labels.push_back(r.raw_score ? bin_cadd_score(*r.raw_score).value : -1);
    return labels;
}

namespace {

void allocate(std::vector<std::uint32_t>& nodes, const SplitRatios& ratios, Rng& rng, std::vector<Split>& out) {
    shuffle(std::span<std::uint32_t>(nodes), rng);
    const double n = static_cast<double>(nodes.size());
    auto n_train = std::min<std::size_t>(nodes.size(), static_cast<std::size_t>(std::llround(n * ratios.train)));
    auto n_val = std::min<std::size_t>(nodes.size() - n_train, static_cast<std::size_t>(std::llround(n * ratios.val)));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        out[nodes[i]] = i < n_train ? Split::train : i < n_train + n_val ? Split::val : Split::test;
    }
}

}  // namespace

SplitResult split_masks(std::span<const int> labels, const SplitRatios& ratios, std::uint64_t seed, bool stratified) {
    if (ratios.train < 0 || ratios.val < 0 || ratios.test < 0 ||
        std::abs(ratios.train + ratios.val + ratios.test - 1.0) > 1e-9) {
        throw std::invalid_argument("split ratios must be non-negative and sum to 1");
    }
    SplitResult result;
    result.split.assign(labels.size(), Split::none);
    Rng rng(seed);

    if (!stratified) {
        std::vector<std::uint32_t> labeled;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] >= 0) labeled.push_back(static_cast<std::uint32_t>(i));
        }
        allocate(labeled, ratios, rng, result.split);
        return result;
    }

    std::map<int, std::vector<std::uint32_t>> by_class;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] >= 0) by_class[labels[i]].push_back(static_cast<std::uint32_t>(i));
    }
    std::vector<std::uint32_t> pooled;
    for (auto& [cls, nodes] : by_class) {
        if (nodes.size() < 3) {
            result.warnings.push_back("class " + std::to_string(cls) + " has only " + std::to_string(nodes.size()) +
                                      " labeled node(s); assigned by global shuffle");
            pooled.insert(pooled.end(), nodes.begin(), nodes.end());
            continue;
        }
        allocate(nodes, ratios, rng, result.split);
    }
    if (!pooled.empty()) {
        std::sort(pooled.begin(), pooled.end());
        allocate(pooled, ratios, rng, result.split);
    }
    return result;
}

}  // namespace varkg
