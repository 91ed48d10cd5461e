#include "varkg/grid.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "varkg/genomic_model.hpp"

namespace varkg {

std::string to_string(HiddenMeaning meaning) { return meaning == HiddenMeaning::width ? "width" : "depth"; }

HiddenMeaning parse_hidden_meaning(const std::string& text) {
    if (text == "width") return HiddenMeaning::width;
    if (text == "depth") return HiddenMeaning::depth;
    throw std::invalid_argument("unknown hidden meaning: " + text);
}

long default_epochs_for(double learning_rate) { return learning_rate == 0.001 ? 1500 : 1000; }

ModelConfig model_config_for(const GridConfig& config, ModelKind kind, std::size_t hidden, std::size_t in_dim) {
    ModelConfig m;
    m.kind = kind;
    m.in_dim = in_dim;
    m.out_dim = kNumCaddCategories;
    m.seed = config.seed;
    m.init = config.init;
    if (config.hidden_meaning == HiddenMeaning::width) {
        m.hidden_dim = hidden;
        m.depth = config.fixed_depth;
    } else {
        m.hidden_dim = config.fixed_width;
        m.depth = hidden;
    }
    return m;
}

GridResult grid_search(const ProjectionGraph& graph, const GridConfig& config, std::ostream* progress) {
    if (config.kinds.empty() || config.hidden.empty() || config.learning_rates.empty()) {
        throw std::invalid_argument("grid has no cells");
    }
    const GraphOperators ops = GraphOperators::from(graph.adjacency);
    const auto test_mask = graph.mask(Split::test);

    GridResult result;
    for (ModelKind kind : config.kinds) {
        std::optional<TrainResult> best;
        std::size_t best_cell = 0;
        for (double lr : config.learning_rates) {
            for (std::size_t hidden : config.hidden) {
                TrainConfig tc;
                tc.learning_rate = lr;
                tc.epochs = config.epochs.value_or(default_epochs_for(lr));
                tc.adam = config.adam;
                auto run = train(graph, ops, model_config_for(config, kind, hidden, graph.features.cols()), tc);
                GridCell cell{kind, hidden, lr, tc.epochs, run.best_val_accuracy, run.best_epoch, std::nullopt};
                if (progress) {
                    *progress << to_string(kind) << " hidden=" << hidden << " lr=" << format_real(lr)
                              << " val=" << format_percent(cell.val_accuracy) << '\n';
                }
                if (!best || run.best_val_accuracy > best->best_val_accuracy) {
                    best = std::move(run);
                    best_cell = result.cells.size();
                }
                result.cells.push_back(cell);
            }
        }
        result.cells[best_cell].test = evaluate(best->model, graph, ops, test_mask);
        result.best_runs.push_back(std::move(*best));
        result.best_cells.push_back(best_cell);
    }
    return result;
}

std::string format_percent(double fraction) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", fraction * 100.0);
    return buf;
}

namespace {

std::string kind_title(ModelKind kind) { return kind == ModelKind::sage ? "GraphSAGE" : "GCN"; }

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string format_grid_table(const GridConfig& config, const GridResult& result) {
    constexpr std::size_t w = 10;
    std::ostringstream out;
    for (double lr : config.learning_rates) {
        out << "LR = " << format_real(lr) << '\n';
        out << pad("", w);
        for (auto kind : config.kinds) out << pad(kind_title(kind), 2 * w);
        out << '\n' << pad("HL", w);
        for (std::size_t k = 0; k < config.kinds.size(); ++k) out << pad("VAL", w) << pad("TEST", w);
        out << '\n';
        for (std::size_t hidden : config.hidden) {
            out << pad(std::to_string(hidden), w);
            for (auto kind : config.kinds) {
                auto it = std::find_if(result.cells.begin(), result.cells.end(), [&](const GridCell& c) {
                    return c.kind == kind && c.hidden == hidden && c.learning_rate == lr;
                });
                if (it == result.cells.end()) {
                    out << pad("-", w) << pad("-", w);
                    continue;
                }
                out << pad(format_percent(it->val_accuracy), w)
                    << pad(it->test ? format_percent(it->test->accuracy) : "-", w);
            }
            out << '\n';
        }
        out << '\n';
    }
    std::string text = out.str();
    // drop trailing spaces on each line
    std::string clean;
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) {
        line.erase(line.find_last_not_of(' ') + 1);
        clean += line;
        clean += '\n';
    }
    return clean;
}

std::string format_grid_csv(const GridResult& result) {
    std::ostringstream out;
    out << "kind,hidden,learning_rate,epochs,best_epoch,val_accuracy,test_accuracy\n";
    for (const auto& c : result.cells) {
        out << to_string(c.kind) << ',' << c.hidden << ',' << format_real(c.learning_rate) << ',' << c.epochs << ','
            << c.best_epoch << ',' << format_real(c.val_accuracy) << ',';
        if (c.test) out << format_real(c.test->accuracy);
        out << '\n';
    }
    return out.str();
}

}  // namespace varkg
