#include "varkg/cadd.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include "varkg/error.hpp"

namespace varkg {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool parse_real(std::string_view text, double& out) {
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size() && std::isfinite(out);
}

}  // namespace

CaddReader::CaddReader(std::istream& in, ParseOptions options) : in_(in), options_(options) {
    while (std::getline(in_, line_)) {
        ++line_number_;
        std::string_view line = chomp(line_);
        if (line.starts_with("##") || trim(line).empty()) continue;
        if (line.starts_with("#")) line.remove_prefix(1);
        auto columns = split_columns(line, 6);
        n_columns_ = columns.size();
        auto find = [&](std::string_view name) -> std::size_t {
            for (std::size_t i = 0; i < columns.size(); ++i) {
                if (lower(trim(columns[i])) == name) return i;
            }
            throw ParseError(line_number_, "CADD header lacks required column '" + std::string(name) + "'");
        };
        col_chrom_ = find("chrom");
        col_pos_ = find("pos");
        col_ref_ = find("ref");
        col_alt_ = find("alt");
        col_raw_ = find("rawscore");
        col_phred_ = find("phred");
        return;
    }
    throw ParseError(line_number_, "missing CADD column header");
}

void CaddReader::report(Severity severity, std::string message) {
    if (options_.strict && severity == Severity::error) throw ParseError(line_number_, message);
    diagnostics_.push_back({line_number_, severity, std::move(message)});
}

std::optional<CaddRecord> CaddReader::next() {
    while (std::getline(in_, line_)) {
        ++line_number_;
        std::string_view line = chomp(line_);
        if (trim(line).empty() || line.starts_with("#")) continue;
        auto fields = split_columns(line, n_columns_);
        if (fields.size() != n_columns_) {
            report(Severity::error, "expected " + std::to_string(n_columns_) + " columns, found " +
                                        std::to_string(fields.size()));
            continue;
        }
        CaddRecord rec;
        rec.chrom = fields[col_chrom_];
        auto pos_text = fields[col_pos_];
        auto [ptr, ec] = std::from_chars(pos_text.data(), pos_text.data() + pos_text.size(), rec.pos);
        if (ec != std::errc() || ptr != pos_text.data() + pos_text.size() || rec.pos < 1) {
            report(Severity::error, "invalid Pos '" + std::string(pos_text) + "'");
            continue;
        }
        rec.ref_allele = fields[col_ref_];
        rec.alt_allele = fields[col_alt_];
        if (rec.chrom.empty() || rec.ref_allele.empty() || rec.alt_allele.empty()) {
            report(Severity::error, "empty Chrom/Ref/Alt");
            continue;
        }
        if (!parse_real(fields[col_raw_], rec.raw_score)) {
            report(Severity::error, "invalid RawScore '" + std::string(fields[col_raw_]) + "'");
            continue;
        }
        if (!parse_real(fields[col_phred_], rec.phred) || rec.phred < 0.0) {
            report(Severity::error, "invalid PHRED '" + std::string(fields[col_phred_]) + "'");
            continue;
        }
        return rec;
    }
    if (in_.bad()) throw InputError("read error after line " + std::to_string(line_number_));
    return std::nullopt;
}

CaddParseResult parse_cadd_tsv(std::istream& in, ParseOptions options) {
    CaddReader reader(in, options);
    CaddParseResult result;
    while (auto rec = reader.next()) result.records.push_back(std::move(*rec));
    result.diagnostics = reader.diagnostics();
    return result;
}

}  // namespace varkg
