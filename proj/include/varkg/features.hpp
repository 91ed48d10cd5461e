#pragma once

#include <array>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "varkg/dataset.hpp"
#include "varkg/dense_matrix.hpp"

namespace varkg {

enum class Encoding { onehot, index };

inline constexpr std::array<std::string_view, 9> kCategoricalFeatures = {
    "accession", "chrom", "ref", "alt", "ann_allele", "ann_effect", "ann_impact", "gene_name", "gene_id"};
inline constexpr std::array<std::string_view, 2> kNumericFeatures = {"pos", "qual"};

/**
 * Category -> index maps (dense, sorted by value) plus min/max of the numeric
 * features. Column layout of an encoded row: one block per categorical
 * feature in kCategoricalFeatures order (accession omitted when
 * include_accession is false), then pos and qual scaled to [0, 1].
 */
struct FeatureVocab {
    std::array<std::map<std::string, std::size_t>, kCategoricalFeatures.size()> categories;
    std::array<double, 2> min{0.0, 0.0};
    std::array<double, 2> max{0.0, 0.0};
    bool include_accession = true;
    std::string fitted_on = "all";  // "all" or "train"

    static FeatureVocab fit(std::span<const DatasetRow> rows, bool include_accession, std::string fitted_on);

    std::size_t dimension(Encoding encoding) const;

    /** Sidecar text: "#key\tvalue" settings, then one "feature\tvalue\tindex" per category value. */
    void save(std::ostream& out) const;
    static FeatureVocab load(std::istream& in);

    bool operator==(const FeatureVocab&) const = default;
};

/** Value of categorical feature `index` (position in kCategoricalFeatures) for a row. */
std::string_view categorical_value(const DatasetRow& row, std::size_t index);

/**
 * Encodes rows against the vocabulary. onehot: one-hot blocks, all zeros for
 * unseen values. index: one column per categorical holding vocab index + 1
 * (0 = unseen). Numerics are min-max scaled and clamped to [0, 1]; a missing
 * QUAL encodes as 0. Throws std::invalid_argument when the vocabulary is
 * incomplete (an empty category map while rows are present).
 */
DenseMatrix encode_features(std::span<const DatasetRow> rows, const FeatureVocab& vocab, Encoding encoding);

std::string to_string(Encoding encoding);
Encoding parse_encoding(std::string_view text);

}  // namespace varkg
