#include "varkg/loss.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace varkg {

DenseMatrix softmax_rows(const DenseMatrix& logits) {
    DenseMatrix p(logits.rows(), logits.cols());
    for (std::size_t i = 0; i < logits.rows(); ++i) {
        auto in = logits.row(i);
        auto out = p.row(i);
        if (in.empty()) continue;
        const double mx = *std::max_element(in.begin(), in.end());
        double sum = 0.0;
        for (std::size_t j = 0; j < in.size(); ++j) sum += (out[j] = std::exp(in[j] - mx));
        for (double& x : out) x /= sum;
    }
    return p;
}

LossResult softmax_cross_entropy(const DenseMatrix& logits, std::span<const int> labels,
                                 std::span<const std::uint8_t> mask) {
    if (labels.size() != logits.rows() || mask.size() != logits.rows()) {
        throw std::invalid_argument("labels/mask length != logit rows");
    }
    const auto count = static_cast<std::size_t>(std::count_if(mask.begin(), mask.end(), [](auto m) { return m; }));
    if (count == 0) throw std::invalid_argument("empty mask");

    LossResult r;
    r.grad = DenseMatrix(logits.rows(), logits.cols());
    const double scale = 1.0 / static_cast<double>(count);
    for (std::size_t i = 0; i < logits.rows(); ++i) {
        if (!mask[i]) continue;
        if (labels[i] < 0 || static_cast<std::size_t>(labels[i]) >= logits.cols()) {
            throw std::invalid_argument("label out of range on masked row " + std::to_string(i));
        }
        auto z = logits.row(i);
        const double mx = *std::max_element(z.begin(), z.end());
        double sum = 0.0;
        for (double v : z) sum += std::exp(v - mx);
        const double log_sum = std::log(sum);
        r.loss += -(z[labels[i]] - mx - log_sum);
        auto g = r.grad.row(i);
        for (std::size_t j = 0; j < z.size(); ++j) {
            double p = std::exp(z[j] - mx - log_sum);
            g[j] = (p - (static_cast<int>(j) == labels[i] ? 1.0 : 0.0)) * scale;
        }
    }
    r.loss *= scale;
    return r;
}

}  // namespace varkg
