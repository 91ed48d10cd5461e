#include "varkg/train.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "varkg/loss.hpp"

namespace varkg {

namespace {

double masked_accuracy(const std::vector<int>& pred, std::span<const int> labels, std::span<const std::uint8_t> mask) {
    std::size_t total = 0, correct = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        if (!mask[i]) continue;
        ++total;
        if (pred[i] == labels[i]) ++correct;
    }
    return total ? static_cast<double>(correct) / static_cast<double>(total) : 0.0;
}

}  // namespace

TrainResult train(const ProjectionGraph& graph, const ModelConfig& model_config, const TrainConfig& config) {
    return train(graph, GraphOperators::from(graph.adjacency), model_config, config);
}

TrainResult train(const ProjectionGraph& graph, const GraphOperators& ops, const ModelConfig& model_config,
                  const TrainConfig& config) {
    if (!(config.learning_rate >= 0.0) || !std::isfinite(config.learning_rate)) {
        throw std::invalid_argument("learning rate must be finite and non-negative");
    }
    if (config.epochs < 1) throw std::invalid_argument("epochs must be >= 1");
    if (!graph.features.all_finite()) throw std::invalid_argument("features contain non-finite values");

    const auto train_mask = graph.mask(Split::train);
    const auto val_mask = graph.mask(Split::val);
    const bool has_val = std::any_of(val_mask.begin(), val_mask.end(), [](auto m) { return m; });

    GnnModel model(model_config);
    AdamState state = AdamState::zeros_like(model.parameters());
    TrainResult result{model, {}, 0, -1.0};
    result.history.reserve(static_cast<std::size_t>(config.epochs));

    ForwardCache cache;
    for (long epoch = 1; epoch <= config.epochs; ++epoch) {
        DenseMatrix logits = model.forward(ops, graph.features, &cache);
        LossResult lr = softmax_cross_entropy(logits, graph.labels, train_mask);
        if (!std::isfinite(lr.loss) || !logits.all_finite()) throw TrainingDiverged(epoch, "non-finite loss");

        auto pred = predict(logits);
        HistoryEntry h{epoch, lr.loss, masked_accuracy(pred, graph.labels, train_mask),
                       masked_accuracy(pred, graph.labels, val_mask)};
        result.history.push_back(h);
        if (has_val && h.val_accuracy > result.best_val_accuracy) {
            result.best_val_accuracy = h.val_accuracy;
            result.best_epoch = epoch;
            result.model = model;
        }
        if (config.log && config.log_every > 0 && epoch % config.log_every == 0) {
            *config.log << "epoch " << epoch << " loss " << h.train_loss << " train " << h.train_accuracy << " val "
                        << h.val_accuracy << '\n';
        }

        auto grads = model.backward(ops, cache, lr.grad);
        adam_step(model.parameters(), grads, state, epoch, config.learning_rate, config.adam);
    }
    if (!has_val) {
        result.model = model;
        result.best_epoch = config.epochs;
        result.best_val_accuracy = 0.0;
    }
    return result;
}

Metrics evaluate_logits(const DenseMatrix& logits, std::span<const int> labels, std::span<const std::uint8_t> mask) {
    LossResult lr = softmax_cross_entropy(logits, labels, mask);  // also rejects an empty mask
    Metrics m;
    m.loss = lr.loss;
    auto pred = predict(logits);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        if (!mask[i]) continue;
        ++m.count;
        if (pred[i] == labels[i]) ++correct;
        if (labels[i] < static_cast<int>(kNumCaddCategories) && pred[i] < static_cast<int>(kNumCaddCategories)) {
            ++m.confusion[static_cast<std::size_t>(labels[i])][static_cast<std::size_t>(pred[i])];
        }
    }
    m.accuracy = static_cast<double>(correct) / static_cast<double>(m.count);
    return m;
}

Metrics evaluate(const GnnModel& model, const ProjectionGraph& graph, const GraphOperators& ops,
                 std::span<const std::uint8_t> mask) {
    return evaluate_logits(model.forward(ops, graph.features), graph.labels, mask);
}

Metrics evaluate(const GnnModel& model, const ProjectionGraph& graph, Split which) {
    return evaluate(model, graph, GraphOperators::from(graph.adjacency), graph.mask(which));
}

}  // namespace varkg
