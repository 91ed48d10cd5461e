#pragma once

#include <filesystem>
#include <string>

#include "varkg/projection.hpp"

namespace varkg {

/**
 * Graph container, all integers little-endian:
 *
 *   "VKGGRAPH"          8-byte magic
 *   u32 version         currently 1
 *   u64 nodes, u64 adjacency entries, u64 feature rows, u64 feature cols
 *   u64 offsets[nodes + 1]
 *   u32 neighbors[adjacency entries]
 *   f64 features[rows * cols]      IEEE-754 binary64, row-major
 *   i32 labels[nodes]
 *   u8  split[nodes]               0 none, 1 train, 2 val, 3 test
 *   per node: u32 len, accession bytes, u32 len, variant key bytes
 *   u32 crc32 of every preceding byte
 */
inline constexpr std::uint32_t kGraphFormatVersion = 1;

std::string encode_graph(const ProjectionGraph& graph);

/** Throws InputError on bad magic/version/checksum or inconsistent contents. */
ProjectionGraph decode_graph(std::string_view bytes);

void export_graph(const ProjectionGraph& graph, const std::filesystem::path& path);
ProjectionGraph import_graph(const std::filesystem::path& path);

/** Structural checks shared by the importer and tests (symmetry, no loops, split/label consistency). */
void validate_graph(const ProjectionGraph& graph);

}  // namespace varkg
