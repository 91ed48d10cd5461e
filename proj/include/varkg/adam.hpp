#pragma once

#include <span>
#include <vector>

#include "varkg/dense_matrix.hpp"

namespace varkg {

struct AdamConfig {
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

/** First and second moment estimates, one pair per parameter tensor. */
struct AdamState {
    std::vector<DenseMatrix> m;
    std::vector<DenseMatrix> v;

    static AdamState zeros_like(std::span<const DenseMatrix> params);
};

/** One bias-corrected Adam update at step t (t >= 1). Shapes must match. */
void adam_step(std::span<DenseMatrix> params, std::span<const DenseMatrix> grads, AdamState& state, long t,
               double lr, const AdamConfig& config = {});

}  // namespace varkg
