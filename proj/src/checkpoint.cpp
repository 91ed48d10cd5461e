#include "varkg/checkpoint.hpp"

#include <zlib.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "varkg/byte_io.hpp"
#include "varkg/error.hpp"

namespace varkg {

namespace {

constexpr std::string_view kMagic = "VKGMODEL";

std::uint32_t crc_of(std::string_view bytes) {
    uLong crc = crc32(0L, Z_NULL, 0);
    std::size_t pos = 0;
    while (pos < bytes.size()) {
        auto chunk = static_cast<uInt>(std::min<std::size_t>(bytes.size() - pos, 1u << 30));
        crc = crc32(crc, reinterpret_cast<const Bytef*>(bytes.data() + pos), chunk);
        pos += chunk;
    }
    return static_cast<std::uint32_t>(crc);
}

}  // namespace

std::string encode_model(const GnnModel& model) {
    using namespace byte_io;
    const auto& c = model.config();
    std::string out(kMagic);
    put(out, kCheckpointVersion);
    put<std::uint8_t>(out, c.kind == ModelKind::gcn ? 0 : 1);
    put<std::uint8_t>(out, c.init == InitScheme::glorot ? 0 : 1);
    put<std::uint64_t>(out, c.in_dim);
    put<std::uint64_t>(out, c.hidden_dim);
    put<std::uint64_t>(out, c.out_dim);
    put<std::uint64_t>(out, c.depth);
    put<std::uint64_t>(out, c.seed);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(model.parameters().size()));
    for (const auto& p : model.parameters()) {
        put<std::uint64_t>(out, p.rows());
        put<std::uint64_t>(out, p.cols());
        for (double x : p.data()) put_f64(out, x);
    }
    put<std::uint32_t>(out, crc_of(out));
    return out;
}

GnnModel decode_model(std::string_view bytes) {
    using namespace byte_io;
    Reader r(bytes, "model file");
    if (bytes.size() < kMagic.size() + 8 || r.raw(kMagic.size()) != kMagic) r.fail("bad magic");
    auto version = r.get<std::uint32_t>();
    if (version != kCheckpointVersion) r.fail("unsupported version " + std::to_string(version));
    {
        Reader tail(bytes.substr(bytes.size() - 4), "model file");
        if (tail.get<std::uint32_t>() != crc_of(bytes.substr(0, bytes.size() - 4))) r.fail("checksum mismatch");
    }
    ModelConfig c;
    auto kind = r.get<std::uint8_t>();
    auto init = r.get<std::uint8_t>();
    if (kind > 1 || init > 1) r.fail("bad model kind or init code");
    c.kind = kind == 0 ? ModelKind::gcn : ModelKind::sage;
    c.init = init == 0 ? InitScheme::glorot : InitScheme::ones;
    c.in_dim = r.get<std::uint64_t>();
    c.hidden_dim = r.get<std::uint64_t>();
    c.out_dim = r.get<std::uint64_t>();
    c.depth = r.get<std::uint64_t>();
    c.seed = r.get<std::uint64_t>();
    auto count = r.get<std::uint32_t>();
    std::vector<DenseMatrix> params;
    for (std::uint32_t k = 0; k < count; ++k) {
        auto rows = r.get<std::uint64_t>();
        auto cols = r.get<std::uint64_t>();
        if (cols != 0 && rows > r.remaining() / 8 / cols) r.fail("implausible tensor size");
        DenseMatrix m(rows, cols);
        for (double& x : m.data()) x = r.get_f64();
        params.push_back(std::move(m));
    }
    if (r.remaining() != 4) r.fail("trailing bytes");
    try {
        return GnnModel(c, std::move(params));
    } catch (const std::invalid_argument& e) {
        r.fail(e.what());
    }
}

void save_model(const GnnModel& model, const std::filesystem::path& path) {
    auto bytes = encode_model(model);
    write_text_file(path, bytes);
}

GnnModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return decode_model(buf.str());
}

std::string format_history_csv(std::span<const HistoryEntry> history) {
    std::ostringstream out;
    out << "epoch,split,metric,value\n";
    for (const auto& h : history) {
        out << h.epoch << ",train,loss," << format_real(h.train_loss) << '\n';
        out << h.epoch << ",train,accuracy," << format_real(h.train_accuracy) << '\n';
        out << h.epoch << ",val,accuracy," << format_real(h.val_accuracy) << '\n';
    }
    return out.str();
}

std::string format_confusion_csv(const Metrics& metrics) {
    std::ostringstream out;
    out << "true\\pred";
    for (std::size_t j = 0; j < kNumCaddCategories; ++j) out << ',' << j;
    out << '\n';
    for (std::size_t i = 0; i < kNumCaddCategories; ++i) {
        out << i;
        for (std::size_t j = 0; j < kNumCaddCategories; ++j) out << ',' << metrics.confusion[i][j];
        out << '\n';
    }
    return out.str();
}

std::string render_confusion(const Metrics& metrics) {
    std::size_t width = 6;
    for (const auto& row : metrics.confusion) {
        for (auto v : row) width = std::max(width, std::to_string(v).size() + 1);
    }
    auto cell = [&](const std::string& s) { return std::string(width - std::min(width, s.size()), ' ') + s; };
    std::ostringstream out;
    out << "true\\pred";
    for (std::size_t j = 0; j < kNumCaddCategories; ++j) out << cell(std::to_string(j));
    out << cell("total") << '\n';
    for (std::size_t i = 0; i < kNumCaddCategories; ++i) {
        std::int64_t total = 0;
        out << std::string(8, ' ') << i;
        for (std::size_t j = 0; j < kNumCaddCategories; ++j) {
            out << cell(std::to_string(metrics.confusion[i][j]));
            total += metrics.confusion[i][j];
        }
        out << cell(std::to_string(total)) << '\n';
    }
    out << "accuracy " << format_real(metrics.accuracy) << " over " << metrics.count << " nodes\n";
    return out.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw InputError("write failed: " + path.string());
}

}  // namespace varkg
