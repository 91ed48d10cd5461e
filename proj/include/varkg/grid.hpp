#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "varkg/train.hpp"

namespace varkg {

/** How the grid's "hidden" values are applied to the model. */
enum class HiddenMeaning {
    width,  // units per layer, depth fixed
    depth,  // number of graph layers, width fixed
};

std::string to_string(HiddenMeaning meaning);
HiddenMeaning parse_hidden_meaning(const std::string& text);

/** 1500 epochs for lr 0.001, 1000 for lr 0.01 and anything else. */
long default_epochs_for(double learning_rate);

struct GridConfig {
    std::vector<ModelKind> kinds{ModelKind::sage, ModelKind::gcn};
    std::vector<std::size_t> hidden{2, 8, 16, 32};
    std::vector<double> learning_rates{0.001, 0.01};
    std::optional<long> epochs;           // overrides the lr pairing when set
    HiddenMeaning hidden_meaning = HiddenMeaning::width;
    std::size_t fixed_depth = 2;          // used when hidden means width
    std::size_t fixed_width = 16;         // used when hidden means depth
    std::uint64_t seed = 0;
    InitScheme init = InitScheme::glorot;
    AdamConfig adam;
};

struct GridCell {
    ModelKind kind = ModelKind::gcn;
    std::size_t hidden = 0;
    double learning_rate = 0.0;
    long epochs = 0;
    double val_accuracy = 0.0;
    long best_epoch = 0;
    std::optional<Metrics> test;  // only on each kind's best-val cell
};

struct GridResult {
    std::vector<GridCell> cells;  // kinds x learning_rates x hidden, in config order
    std::vector<TrainResult> best_runs;  // one per kind (same order as config kinds)
    std::vector<std::size_t> best_cells; // cell index of each kind's best run
};

ModelConfig model_config_for(const GridConfig& config, ModelKind kind, std::size_t hidden, std::size_t in_dim);

/**
 * Trains every (kind, lr, hidden) cell on the graph's train mask and selects,
 * per kind, the cell with the highest val accuracy (first in config order on
 * ties). Only those cells are evaluated on the test mask.
 */
GridResult grid_search(const ProjectionGraph& graph, const GridConfig& config, std::ostream* progress = nullptr);

/** Text table: one block per learning rate, rows = hidden values, VAL/TEST per kind, "-" for no test. */
std::string format_grid_table(const GridConfig& config, const GridResult& result);

/** CSV: kind,hidden,learning_rate,epochs,best_epoch,val_accuracy,test_accuracy (empty when not computed). */
std::string format_grid_csv(const GridResult& result);

/** Percent with two decimals, e.g. 0.8667 -> "86.67". */
std::string format_percent(double fraction);

}  // namespace varkg
