#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "varkg/gnn_model.hpp"
#include "varkg/train.hpp"

namespace varkg {

/**
 * Model checkpoint, all integers little-endian:
 *
 *   "VKGMODEL"  8-byte magic
 *   u32 version (1)
 *   u8 kind (0 gcn, 1 sage), u8 init (0 glorot, 1 ones)
 *   u64 in_dim, hidden_dim, out_dim, depth, seed
 *   u32 tensor count, then per tensor: u64 rows, u64 cols, f64 values row-major
 *   u32 crc32 of every preceding byte
 */
inline constexpr std::uint32_t kCheckpointVersion = 1;

std::string encode_model(const GnnModel& model);
GnnModel decode_model(std::string_view bytes);
void save_model(const GnnModel& model, const std::filesystem::path& path);
GnnModel load_model(const std::filesystem::path& path);

/** Long-format CSV: epoch,split,metric,value (train loss, train accuracy, val accuracy per epoch). */
std::string format_history_csv(std::span<const HistoryEntry> history);

/** CSV with header "true\\pred,0,1,2,3,4" and one row per true class. */
std::string format_confusion_csv(const Metrics& metrics);

/** Aligned text rendering of the confusion matrix with row totals. */
std::string render_confusion(const Metrics& metrics);

void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace varkg
