#include "varkg/text_input.hpp"

#include <zlib.h>

#include <array>
#include <fstream>
#include <streambuf>

#include "varkg/error.hpp"
#include "varkg/parse_common.hpp"

namespace varkg {

namespace {

class GzipStreambuf : public std::streambuf {
public:
    explicit GzipStreambuf(const std::filesystem::path& path)
        : file_(gzopen(path.c_str(), "rb")) {
        if (file_ != nullptr) gzbuffer(file_, 1 << 17);
    }
    ~GzipStreambuf() override {
        if (file_ != nullptr) gzclose(file_);
    }
    GzipStreambuf(const GzipStreambuf&) = delete;
    GzipStreambuf& operator=(const GzipStreambuf&) = delete;

    bool is_open() const { return file_ != nullptr; }

protected:
    int_type underflow() override {
        if (gptr() < egptr()) return traits_type::to_int_type(*gptr());
        int n = gzread(file_, buffer_.data(), static_cast<unsigned>(buffer_.size()));
        if (n < 0) {
            int errnum = 0;
            const char* msg = gzerror(file_, &errnum);
            throw InputError(std::string("gzip read failed: ") + (msg ? msg : "unknown error"));
        }
        if (n == 0) return traits_type::eof();
        setg(buffer_.data(), buffer_.data(), buffer_.data() + n);
        return traits_type::to_int_type(*gptr());
    }

private:
    gzFile file_;
    std::array<char, 1 << 16> buffer_{};
};

class GzipStream : public std::istream {
public:
    explicit GzipStream(const std::filesystem::path& path) : std::istream(nullptr), buf_(path) {
        rdbuf(&buf_);
        exceptions(std::ios::badbit);  // rethrow decode errors from underflow
    }
    bool is_open() const { return buf_.is_open(); }

private:
    GzipStreambuf buf_;
};

}  // namespace

std::unique_ptr<std::istream> open_text_input(const std::filesystem::path& path) {
    std::error_code ec;
    if (std::filesystem::is_directory(path, ec)) {
        throw InputError("cannot read " + path.string() + ": is a directory");
    }
    if (path.extension() == ".gz") {
        auto stream = std::make_unique<GzipStream>(path);
        if (!stream->is_open()) throw InputError("cannot open " + path.string());
        return stream;
    }
    auto stream = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!stream->is_open()) throw InputError("cannot open " + path.string());
    return stream;
}

std::string accession_from_path(const std::filesystem::path& path) {
    std::string name = path.filename().string();
    auto dot = name.find('.');
    return dot == std::string::npos ? name : name.substr(0, dot);
}

// parse_common helpers

std::string to_string(Severity severity) {
    return severity == Severity::warning ? "warning" : "error";
}

std::string to_string(const ParseDiagnostic& d) {
    return "line " + std::to_string(d.line_number) + ": " + to_string(d.severity) + ": " +
           d.message;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<std::string_view> split_whitespace(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
        if (i > start) out.push_back(text.substr(start, i - start));
    }
    return out;
}

std::vector<std::string_view> split_columns(std::string_view line, std::size_t min_fields) {
    auto fields = split(line, '\t');
    if (fields.size() < min_fields) return split_whitespace(line);
    return fields;
}

std::string_view trim(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    return text;
}

}  // namespace varkg
