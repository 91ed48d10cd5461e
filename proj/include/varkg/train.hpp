#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "varkg/adam.hpp"
#include "varkg/gnn_model.hpp"
#include "varkg/projection.hpp"

namespace varkg {

struct TrainConfig {
    double learning_rate = 0.01;
    long epochs = 1000;
    AdamConfig adam;
    long log_every = 0;          // 0 disables progress lines
    std::ostream* log = nullptr;
};

struct HistoryEntry {
    long epoch = 0;  // 1-based
    double train_loss = 0.0;
    double train_accuracy = 0.0;
    double val_accuracy = 0.0;

    bool operator==(const HistoryEntry&) const = default;
};

struct TrainResult {
    GnnModel model;      // parameters with the best validation accuracy
    std::vector<HistoryEntry> history;
    long best_epoch = 0;  // epoch whose (pre-update) parameters were kept
    double best_val_accuracy = 0.0;
};

class TrainingDiverged : public std::runtime_error {
public:
    TrainingDiverged(long epoch, const std::string& what)
        : std::runtime_error("training diverged at epoch " + std::to_string(epoch) + ": " + what), epoch_(epoch) {}
    long epoch() const { return epoch_; }

private:
    long epoch_;
};

/**
 * Full-batch training. Each epoch runs one forward pass, records the train
 * loss and train/val accuracy of the current parameters, keeps a copy of them
 * if the val accuracy is a new maximum (first maximum wins), then backprops
 * the masked train loss and takes one Adam step. With an empty val mask the
 * final parameters are kept.
 */
TrainResult train(const ProjectionGraph& graph, const ModelConfig& model_config, const TrainConfig& config);
TrainResult train(const ProjectionGraph& graph, const GraphOperators& ops, const ModelConfig& model_config,
                  const TrainConfig& config);

struct Metrics {
    double accuracy = 0.0;
    double loss = 0.0;
    std::array<std::array<std::int64_t, kNumCaddCategories>, kNumCaddCategories> confusion{};  // [true][pred]
    std::size_t count = 0;
};

/** Throws std::invalid_argument for an empty mask. */
Metrics evaluate(const GnnModel& model, const ProjectionGraph& graph, const GraphOperators& ops,
                 std::span<const std::uint8_t> mask);
Metrics evaluate(const GnnModel& model, const ProjectionGraph& graph, Split which);

/** Metrics from precomputed logits. */
Metrics evaluate_logits(const DenseMatrix& logits, std::span<const int> labels, std::span<const std::uint8_t> mask);

}  // namespace varkg
