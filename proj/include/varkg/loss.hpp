#pragma once

#include <cstdint>
#include <span>

#include "varkg/dense_matrix.hpp"

namespace varkg {

struct LossResult {
    double loss = 0.0;
    DenseMatrix grad;  // d loss / d logits; zero on unmasked rows
};

/**
 * Mean over masked rows of -log softmax(logits)[label]. Throws
 * std::invalid_argument for an empty mask or a masked label outside the
 * logit columns.
 */
LossResult softmax_cross_entropy(const DenseMatrix& logits, std::span<const int> labels,
                                 std::span<const std::uint8_t> mask);

/** Row-wise softmax with max subtraction. */
DenseMatrix softmax_rows(const DenseMatrix& logits);

}  // namespace varkg
