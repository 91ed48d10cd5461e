#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "varkg/dense_matrix.hpp"
#include "varkg/genomic_model.hpp"
#include "varkg/kernels.hpp"
#include "varkg/projection.hpp"

namespace varkg {

enum class ModelKind { gcn, sage };
enum class InitScheme {
    glorot,  // uniform in +-sqrt(6 / (fan_in + fan_out)), biases zero
    ones,    // every weight 1, biases zero
};

std::string to_string(ModelKind kind);
ModelKind parse_model_kind(const std::string& text);
std::string to_string(InitScheme scheme);
InitScheme parse_init_scheme(const std::string& text);

struct ModelConfig {
    ModelKind kind = ModelKind::gcn;
    std::size_t in_dim = 0;
    std::size_t hidden_dim = 16;
    std::size_t out_dim = kNumCaddCategories;
    std::size_t depth = 2;  // graph layers; the last one is linear
    std::uint64_t seed = 0;
    InitScheme init = InitScheme::glorot;

    bool operator==(const ModelConfig&) const = default;
};

/** Sparse operators derived once per graph and shared by forward and backward passes. */
struct GraphOperators {
    CsrMatrix a_hat;       // D^-1/2 (A + I) D^-1/2, symmetric
    CsrMatrix mean;        // row v averages the neighbors of v; empty row for isolated nodes
    CsrMatrix mean_t;      // transpose of mean

    static GraphOperators from(const Adjacency& adjacency);
};

CsrMatrix normalized_adjacency(const Adjacency& adjacency);
CsrMatrix mean_aggregator(const Adjacency& adjacency);
CsrMatrix transpose(const CsrMatrix& m);

/** Intermediate values recorded by forward() for backward(). */
struct ForwardCache {
    std::vector<DenseMatrix> inputs;      // H_l fed into layer l
    std::vector<DenseMatrix> aggregated;  // sage: mean of neighbor H_l
    std::vector<DenseMatrix> pre;         // Z_l before activation
};

/**
 * Stack of `depth` graph layers: ReLU after every layer except the last.
 *
 * gcn layer:  Z = A_hat (H W) + b
 * sage layer: Z = H W_self + mean_N(H) W_neigh + b
 *
 * Parameters are kept as a flat list; per layer gcn stores [W, b] and sage
 * stores [W_self, W_neigh, b], with b a 1 x out row.
 */
class GnnModel {
public:
    explicit GnnModel(const ModelConfig& config);
    GnnModel(const ModelConfig& config, std::vector<DenseMatrix> parameters);

    const ModelConfig& config() const { return config_; }
    std::vector<DenseMatrix>& parameters() { return params_; }
    const std::vector<DenseMatrix>& parameters() const { return params_; }
    std::vector<std::string> parameter_names() const;

    /** Logits, n x out_dim. Throws std::invalid_argument on shape mismatch. */
    DenseMatrix forward(const GraphOperators& ops, const DenseMatrix& x, ForwardCache* cache = nullptr) const;

    /** Gradients w.r.t. every parameter (same order/shapes as parameters()). */
    std::vector<DenseMatrix> backward(const GraphOperators& ops, const ForwardCache& cache,
                                      const DenseMatrix& grad_logits) const;

    std::size_t layer_in(std::size_t layer) const;
    std::size_t layer_out(std::size_t layer) const;
    std::size_t params_per_layer() const { return config_.kind == ModelKind::gcn ? 2 : 3; }

private:
    ModelConfig config_;
    std::vector<DenseMatrix> params_;
};

DenseMatrix gcn_forward(const GnnModel& model, const CsrMatrix& a_hat, const DenseMatrix& x);
DenseMatrix sage_forward(const GnnModel& model, const Adjacency& adjacency, const DenseMatrix& x);

/** Per-row argmax; ties resolve to the lowest class index. */
std::vector<int> predict(const DenseMatrix& logits);

}  // namespace varkg
