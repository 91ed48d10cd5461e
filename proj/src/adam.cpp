#include "varkg/adam.hpp"

#include <cmath>
#include <stdexcept>

namespace varkg {

AdamState AdamState::zeros_like(std::span<const DenseMatrix> params) {
    AdamState s;
    for (const auto& p : params) {
        s.m.emplace_back(p.rows(), p.cols());
        s.v.emplace_back(p.rows(), p.cols());
    }
    return s;
}

void adam_step(std::span<DenseMatrix> params, std::span<const DenseMatrix> grads, AdamState& state, long t,
               double lr, const AdamConfig& config) {
    if (t < 1) throw std::invalid_argument("adam step index must be >= 1");
    if (grads.size() != params.size() || state.m.size() != params.size() || state.v.size() != params.size()) {
        throw std::invalid_argument("adam: tensor count mismatch");
    }
    const double c1 = 1.0 - std::pow(config.beta1, static_cast<double>(t));
    const double c2 = 1.0 - std::pow(config.beta2, static_cast<double>(t));
    for (std::size_t k = 0; k < params.size(); ++k) {
        if (!params[k].same_shape(grads[k]) || !params[k].same_shape(state.m[k]) ||
            !params[k].same_shape(state.v[k])) {
            throw std::invalid_argument("adam: shape mismatch");
        }
        auto p = params[k].data();
        auto g = grads[k].data();
        auto m = state.m[k].data();
        auto v = state.v[k].data();
        for (std::size_t i = 0; i < p.size(); ++i) {
            m[i] = config.beta1 * m[i] + (1.0 - config.beta1) * g[i];
            v[i] = config.beta2 * v[i] + (1.0 - config.beta2) * g[i] * g[i];
            const double m_hat = m[i] / c1;
            const double v_hat = v[i] / c2;
            p[i] -= lr * m_hat / (std::sqrt(v_hat) + config.epsilon);
        }
    }
}

}  // namespace varkg
