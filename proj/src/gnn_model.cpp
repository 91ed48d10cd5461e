#include "varkg/gnn_model.hpp"

#include <cmath>
#include <stdexcept>

#include "varkg/random.hpp"

namespace varkg {

std::string to_string(ModelKind kind) { return kind == ModelKind::gcn ? "gcn" : "sage"; }

ModelKind parse_model_kind(const std::string& text) {
    if (text == "gcn") return ModelKind::gcn;
    if (text == "sage" || text == "graphsage") return ModelKind::sage;
    throw std::invalid_argument("unknown model kind: " + text);
}

std::string to_string(InitScheme scheme) { return scheme == InitScheme::glorot ? "glorot" : "ones"; }

InitScheme parse_init_scheme(const std::string& text) {
    if (text == "glorot") return InitScheme::glorot;
    if (text == "ones") return InitScheme::ones;
    throw std::invalid_argument("unknown init scheme: " + text);
}

CsrMatrix normalized_adjacency(const Adjacency& adj) {
    const std::size_t n = adj.num_nodes();
    auto weight = [&adj](std::size_t u, std::size_t v) {
        return 1.0 / std::sqrt(static_cast<double>(adj.degree(u) + 1) * static_cast<double>(adj.degree(v) + 1));
    };

    CsrMatrix m;
    m.n = n;
    m.offsets.assign(1, 0);
    m.cols.reserve(adj.neighbors.size() + n);
    m.values.reserve(adj.neighbors.size() + n);
    for (std::size_t v = 0; v < n; ++v) {
        bool self_done = false;
        auto emit_self = [&] {
            m.cols.push_back(static_cast<std::uint32_t>(v));
            m.values.push_back(weight(v, v));
            self_done = true;
        };
        for (auto u : adj.neighbors_of(v)) {
            if (!self_done && u > v) emit_self();
            m.cols.push_back(u);
            m.values.push_back(weight(v, u));
        }
        if (!self_done) emit_self();
        m.offsets.push_back(m.cols.size());
    }
    return m;
}

CsrMatrix mean_aggregator(const Adjacency& adj) {
    CsrMatrix m;
    m.n = adj.num_nodes();
    m.offsets.assign(1, 0);
    m.cols.reserve(adj.neighbors.size());
    m.values.reserve(adj.neighbors.size());
    for (std::size_t v = 0; v < m.n; ++v) {
        const double w = adj.degree(v) ? 1.0 / static_cast<double>(adj.degree(v)) : 0.0;
        for (auto u : adj.neighbors_of(v)) {
            m.cols.push_back(u);
            m.values.push_back(w);
        }
        m.offsets.push_back(m.cols.size());
    }
    return m;
}

CsrMatrix transpose(const CsrMatrix& a) {
    CsrMatrix t;
    t.n = a.n;
    t.offsets.assign(a.n + 1, 0);
    for (auto c : a.cols) ++t.offsets[c + 1];
    for (std::size_t i = 0; i < a.n; ++i) t.offsets[i + 1] += t.offsets[i];
    t.cols.resize(a.cols.size());
    t.values.resize(a.values.size());
    std::vector<std::size_t> fill(t.offsets.begin(), t.offsets.end() - 1);
    // rows visited in order, so each transposed row stays column-sorted
    for (std::size_t r = 0; r < a.n; ++r) {
        for (std::size_t k = a.offsets[r]; k < a.offsets[r + 1]; ++k) {
            auto pos = fill[a.cols[k]]++;
            t.cols[pos] = static_cast<std::uint32_t>(r);
            t.values[pos] = a.values[k];
        }
    }
    return t;
}

GraphOperators GraphOperators::from(const Adjacency& adjacency) {
    GraphOperators ops;
    ops.a_hat = normalized_adjacency(adjacency);
    ops.mean = mean_aggregator(adjacency);
    ops.mean_t = transpose(ops.mean);
    return ops;
}

namespace {

void add_bias(DenseMatrix& z, const DenseMatrix& b) {
    for (std::size_t i = 0; i < z.rows(); ++i) {
        auto row = z.row(i);
        for (std::size_t j = 0; j < z.cols(); ++j) row[j] += b(0, j);
    }
}

void add_into(DenseMatrix& a, const DenseMatrix& b) {
    auto x = a.data();
    auto y = b.data();
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
}

DenseMatrix column_sums(const DenseMatrix& m) {
    DenseMatrix s(1, m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = m.row(i);
        for (std::size_t j = 0; j < m.cols(); ++j) s(0, j) += row[j];
    }
    return s;
}

void relu_inplace(DenseMatrix& m) {
    for (double& x : m.data()) x = x > 0.0 ? x : 0.0;
}

}  // namespace

GnnModel::GnnModel(const ModelConfig& config) : config_(config) {
    if (config_.depth < 1) throw std::invalid_argument("depth must be >= 1");
    if (config_.hidden_dim < 1) throw std::invalid_argument("hidden_dim must be >= 1");
    if (config_.out_dim < 1) throw std::invalid_argument("out_dim must be >= 1");
    Rng rng(config_.seed);
    for (std::size_t l = 0; l < config_.depth; ++l) {
        const std::size_t fan_in = layer_in(l), fan_out = layer_out(l);
        const double limit = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
        const std::size_t weights = params_per_layer() - 1;
        for (std::size_t w = 0; w < weights; ++w) {
            DenseMatrix m(fan_in, fan_out);
            for (double& x : m.data()) {
                x = config_.init == InitScheme::ones ? 1.0 : uniform_between(rng, -limit, limit);
            }
            params_.push_back(std::move(m));
        }
        params_.emplace_back(1, fan_out);
    }
}

GnnModel::GnnModel(const ModelConfig& config, std::vector<DenseMatrix> parameters)
    : config_(config), params_(std::move(parameters)) {
    if (params_.size() != config_.depth * params_per_layer()) {
        throw std::invalid_argument("parameter count does not match model config");
    }
    for (std::size_t l = 0; l < config_.depth; ++l) {
        for (std::size_t k = 0; k < params_per_layer(); ++k) {
            const auto& p = params_[l * params_per_layer() + k];
            bool bias = k + 1 == params_per_layer();
            std::size_t rows = bias ? 1 : layer_in(l);
            if (p.rows() != rows || p.cols() != layer_out(l)) {
                throw std::invalid_argument("parameter shape does not match model config");
            }
        }
    }
}

std::size_t GnnModel::layer_in(std::size_t layer) const { return layer == 0 ? config_.in_dim : config_.hidden_dim; }

std::size_t GnnModel::layer_out(std::size_t layer) const {
    return layer + 1 == config_.depth ? config_.out_dim : config_.hidden_dim;
}

std::vector<std::string> GnnModel::parameter_names() const {
    std::vector<std::string> names;
    for (std::size_t l = 0; l < config_.depth; ++l) {
        auto prefix = "layer" + std::to_string(l) + ".";
        if (config_.kind == ModelKind::gcn) {
            names.push_back(prefix + "weight");
        } else {
            names.push_back(prefix + "weight_self");
            names.push_back(prefix + "weight_neigh");
        }
        names.push_back(prefix + "bias");
    }
    return names;
}

DenseMatrix GnnModel::forward(const GraphOperators& ops, const DenseMatrix& x, ForwardCache* cache) const {
    if (x.cols() != config_.in_dim) {
        throw std::invalid_argument("feature width " + std::to_string(x.cols()) + " != model in_dim " +
                                    std::to_string(config_.in_dim));
    }
    if (x.rows() != ops.a_hat.n) throw std::invalid_argument("feature rows != graph nodes");
    if (cache) *cache = ForwardCache{};

    DenseMatrix h = x;
    for (std::size_t l = 0; l < config_.depth; ++l) {
        const auto* p = &params_[l * params_per_layer()];
        DenseMatrix z;
        if (config_.kind == ModelKind::gcn) {
            z = kernels::spmm(ops.a_hat, kernels::matmul(h, p[0]));
            add_bias(z, p[1]);
        } else {
            DenseMatrix agg = kernels::spmm(ops.mean, h);
            z = kernels::matmul(h, p[0]);
            add_into(z, kernels::matmul(agg, p[1]));
            add_bias(z, p[2]);
            if (cache) cache->aggregated.push_back(std::move(agg));
        }
        if (cache) {
            cache->inputs.push_back(h);
            cache->pre.push_back(z);
        }
        if (l + 1 < config_.depth) relu_inplace(z);
        h = std::move(z);
    }
    return h;
}

std::vector<DenseMatrix> GnnModel::backward(const GraphOperators& ops, const ForwardCache& cache,
                                            const DenseMatrix& grad_logits) const {
    if (cache.inputs.size() != config_.depth) throw std::invalid_argument("forward cache does not match model");
    std::vector<DenseMatrix> grads(params_.size());
    DenseMatrix dz = grad_logits;
    for (std::size_t l = config_.depth; l-- > 0;) {
        const std::size_t base = l * params_per_layer();
        const auto& h = cache.inputs[l];
        DenseMatrix dh;
        if (config_.kind == ModelKind::gcn) {
            DenseMatrix dt = kernels::spmm(ops.a_hat, dz);  // A_hat is symmetric
            grads[base] = kernels::matmul_tn(h, dt);
            grads[base + 1] = column_sums(dz);
            if (l > 0) dh = kernels::matmul_nt(dt, params_[base]);
        } else {
            grads[base] = kernels::matmul_tn(h, dz);
            grads[base + 1] = kernels::matmul_tn(cache.aggregated[l], dz);
            grads[base + 2] = column_sums(dz);
            if (l > 0) {
                dh = kernels::matmul_nt(dz, params_[base]);
                add_into(dh, kernels::spmm(ops.mean_t, kernels::matmul_nt(dz, params_[base + 1])));
            }
        }
        if (l == 0) break;
        const auto& z_prev = cache.pre[l - 1];
        auto d = dh.data();
        auto zp = z_prev.data();
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (!(zp[i] > 0.0)) d[i] = 0.0;
        }
        dz = std::move(dh);
    }
    return grads;
}

DenseMatrix gcn_forward(const GnnModel& model, const CsrMatrix& a_hat, const DenseMatrix& x) {
    if (model.config().kind != ModelKind::gcn) throw std::invalid_argument("gcn_forward needs a gcn model");
    GraphOperators ops;
    ops.a_hat = a_hat;
    return model.forward(ops, x);
}

DenseMatrix sage_forward(const GnnModel& model, const Adjacency& adjacency, const DenseMatrix& x) {
    if (model.config().kind != ModelKind::sage) throw std::invalid_argument("sage_forward needs a sage model");
    return model.forward(GraphOperators::from(adjacency), x);
}

std::vector<int> predict(const DenseMatrix& logits) {
    std::vector<int> out(logits.rows(), 0);
    for (std::size_t i = 0; i < logits.rows(); ++i) {
        auto row = logits.row(i);
        std::size_t best = 0;
        for (std::size_t j = 1; j < row.size(); ++j) {
            if (row[j] > row[best]) best = j;
        }
        out[i] = static_cast<int>(best);
    }
    return out;
}

}  // namespace varkg
