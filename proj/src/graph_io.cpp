#include "varkg/graph_io.hpp"

#include <zlib.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "varkg/byte_io.hpp"
#include "varkg/error.hpp"

namespace varkg {

namespace {

constexpr std::string_view kMagic = "VKGGRAPH";

std::uint32_t crc_of(std::string_view bytes) {
    uLong crc = crc32(0L, Z_NULL, 0);
    // zlib takes uInt lengths; feed in chunks
    std::size_t pos = 0;
    while (pos < bytes.size()) {
        auto chunk = static_cast<uInt>(std::min<std::size_t>(bytes.size() - pos, 1u << 30));
        crc = crc32(crc, reinterpret_cast<const Bytef*>(bytes.data() + pos), chunk);
        pos += chunk;
    }
    return static_cast<std::uint32_t>(crc);
}

}  // namespace

void validate_graph(const ProjectionGraph& g) {
    const std::size_t n = g.num_nodes();
    const auto& adj = g.adjacency;
    if (adj.offsets.size() != n + 1 || adj.offsets.front() != 0 || adj.offsets.back() != adj.neighbors.size()) {
        throw InputError("graph: adjacency offsets inconsistent with node count");
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (adj.offsets[v] > adj.offsets[v + 1]) throw InputError("graph: offsets not monotone");
        auto nb = adj.neighbors_of(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (nb[i] >= n) throw InputError("graph: neighbor index out of range");
            if (nb[i] == v) throw InputError("graph: self-loop");
            if (i > 0 && nb[i] <= nb[i - 1]) throw InputError("graph: neighbor list not strictly sorted");
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        for (auto u : adj.neighbors_of(v)) {
            auto back = adj.neighbors_of(u);
            if (!std::binary_search(back.begin(), back.end(), static_cast<std::uint32_t>(v))) {
                throw InputError("graph: adjacency not symmetric");
            }
        }
    }
    if (!g.features.empty() && g.features.rows() != n) throw InputError("graph: feature rows != node count");
    if (g.labels.size() != n || g.split.size() != n) throw InputError("graph: labels/split size != node count");
    for (std::size_t v = 0; v < n; ++v) {
        if (g.labels[v] < -1 || g.labels[v] > 4) throw InputError("graph: label out of range");
        bool labeled = g.labels[v] >= 0;
        if (static_cast<std::uint8_t>(g.split[v]) > 3) throw InputError("graph: bad split code");
        if (!labeled && g.split[v] != Split::none) throw InputError("graph: unlabeled node in a split");
    }
}

std::string encode_graph(const ProjectionGraph& g) {
    using namespace byte_io;
    std::string out(kMagic);
    put(out, kGraphFormatVersion);
    const std::size_t n = g.num_nodes();
    put<std::uint64_t>(out, n);
    put<std::uint64_t>(out, g.adjacency.neighbors.size());
    put<std::uint64_t>(out, g.features.rows());
    put<std::uint64_t>(out, g.features.cols());
    for (auto o : g.adjacency.offsets) put<std::uint64_t>(out, o);
    for (auto v : g.adjacency.neighbors) put<std::uint32_t>(out, v);
    for (double x : g.features.data()) put_f64(out, x);
    for (int l : g.labels) put<std::int32_t>(out, l);
    for (auto s : g.split) put<std::uint8_t>(out, static_cast<std::uint8_t>(s));
    for (const auto& m : g.node_meta) {
        put_str(out, m.accession);
        put_str(out, m.variant_key);
    }
    put<std::uint32_t>(out, crc_of(out));
    return out;
}

ProjectionGraph decode_graph(std::string_view bytes) {
    using namespace byte_io;
    Reader r(bytes, "graph file");
    if (bytes.size() < kMagic.size() + 4 || r.raw(kMagic.size()) != kMagic) r.fail("bad magic");
    auto version = r.get<std::uint32_t>();
    if (version != kGraphFormatVersion) r.fail("unsupported version " + std::to_string(version));
    if (bytes.size() < 4) r.fail("truncated data");
    {
        Reader tail(bytes.substr(bytes.size() - 4), "graph file");
        if (tail.get<std::uint32_t>() != crc_of(bytes.substr(0, bytes.size() - 4))) r.fail("checksum mismatch");
    }
    auto n = r.get<std::uint64_t>();
    auto n_adj = r.get<std::uint64_t>();
    auto rows = r.get<std::uint64_t>();
    auto cols = r.get<std::uint64_t>();
    // cheap size sanity before allocating
    if (n > bytes.size() || n_adj > bytes.size() || (cols != 0 && rows > bytes.size() / 8 / cols)) {
        r.fail("implausible sizes");
    }
    ProjectionGraph g;
    g.adjacency.offsets.resize(n + 1);
    for (auto& o : g.adjacency.offsets) o = r.get<std::uint64_t>();
    g.adjacency.neighbors.resize(n_adj);
    for (auto& v : g.adjacency.neighbors) v = r.get<std::uint32_t>();
    g.features = DenseMatrix(rows, cols);
    for (auto& x : g.features.data()) x = r.get_f64();
    g.labels.resize(n);
    for (auto& l : g.labels) l = r.get<std::int32_t>();
    g.split.resize(n);
    for (auto& s : g.split) s = static_cast<Split>(r.get<std::uint8_t>());
    g.node_meta.resize(n);
    for (auto& m : g.node_meta) {
        m.accession = r.get_str();
        m.variant_key = r.get_str();
    }
    if (r.remaining() != 4) r.fail("trailing bytes");
    validate_graph(g);
    return g;
}

void export_graph(const ProjectionGraph& graph, const std::filesystem::path& path) {
    auto bytes = encode_graph(graph);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw InputError("write failed: " + path.string());
}

ProjectionGraph import_graph(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return decode_graph(buf.str());
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

}  // namespace varkg
