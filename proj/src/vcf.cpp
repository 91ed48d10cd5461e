#include "varkg/vcf.hpp"

#include <charconv>
#include <cmath>

#include "varkg/error.hpp"

namespace varkg {

namespace {

constexpr std::size_t kMandatoryColumns = 8;

struct LineError {
    std::string message;
};

std::int64_t parse_pos(std::string_view text) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
        throw LineError{"invalid POS '" + std::string(text) + "'"};
    }
    return value;
}

std::optional<double> parse_qual(std::string_view text) {
    if (text == ".") return std::nullopt;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value) ||
        value < 0.0) {
        throw LineError{"invalid QUAL '" + std::string(text) + "'"};
    }
    return value;
}

std::vector<InfoEntry> parse_info(std::string_view text) {
    std::vector<InfoEntry> entries;
    if (text.empty() || text == ".") return entries;
    for (auto item : split(text, ';')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            entries.push_back({std::string(item), "", true});
        } else {
            entries.push_back({std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)), false});
        }
    }
    return entries;
}

}  // namespace

std::vector<AnnAnnotation> parse_ann_info(std::string_view value, std::size_t* rejected) {
    std::vector<AnnAnnotation> out;
    std::size_t dropped = 0;
    if (!value.empty()) {
        for (auto entry : split(value, ',')) {
            auto fields = split(entry, '|');
            if (fields.size() < 2 || fields[0].empty() || fields[1].empty()) {
                ++dropped;
                continue;
            }
            AnnAnnotation ann;
            ann.allele = fields[0];
            ann.effect = fields[1];
            if (fields.size() > 2) ann.putative_impact = fields[2];
            if (fields.size() > 3) ann.gene_name = fields[3];
            if (fields.size() > 4) ann.gene_id = fields[4];
            for (std::size_t i = 5; i < fields.size(); ++i) ann.extra_fields.emplace_back(fields[i]);
            out.push_back(std::move(ann));
        }
    }
    if (rejected != nullptr) *rejected = dropped;
    return out;
}

VcfReader::VcfReader(std::istream& in, std::string accession, ParseOptions options)
    : in_(in), accession_(std::move(accession)), options_(options) {
    if (accession_.empty()) throw InputError("VCF reader needs a non-empty accession");
    read_header();
}

void VcfReader::read_header() {
    while (std::getline(in_, line_)) {
        ++line_number_;
        std::string_view line = chomp(line_);
        if (line.starts_with("##")) {
            header_.meta_lines.emplace_back(line);
            continue;
        }
        if (line.starts_with("#CHROM")) {
            auto columns = split_columns(line, kMandatoryColumns);
            static constexpr std::string_view kExpected[] = {"#CHROM", "POS",    "ID",     "REF",
                                                             "ALT",    "QUAL",   "FILTER", "INFO"};
            if (columns.size() < kMandatoryColumns) {
                throw ParseError(line_number_, "column header has fewer than 8 columns");
            }
            for (std::size_t i = 0; i < kMandatoryColumns; ++i) {
                if (columns[i] != kExpected[i]) {
                    throw ParseError(line_number_, "unexpected column '" + std::string(columns[i]) +
                                                       "', expected '" + std::string(kExpected[i]) + "'");
                }
            }
            header_.column_line = std::string(line);
            for (std::size_t i = kMandatoryColumns + 1; i < columns.size(); ++i) {
                header_.sample_names.emplace_back(columns[i]);
            }
            return;
        }
        if (trim(line).empty()) continue;
        throw ParseError(line_number_, "data line before #CHROM column header");
    }
    throw ParseError(line_number_, "missing #CHROM column header");
}

void VcfReader::report(Severity severity, std::string message) {
    if (options_.strict && severity == Severity::error) throw ParseError(line_number_, message);
    diagnostics_.push_back({line_number_, severity, std::move(message)});
}

std::optional<VariantRecord> VcfReader::next() {
    while (std::getline(in_, line_)) {
        ++line_number_;
        std::string_view line = chomp(line_);
        if (trim(line).empty()) continue;
        if (line.starts_with("#")) {
            report(Severity::warning, "header line after #CHROM ignored");
            continue;
        }
        try {
            auto fields = split_columns(line, kMandatoryColumns);
            if (fields.size() < kMandatoryColumns) {
                throw LineError{"expected at least 8 columns, found " + std::to_string(fields.size())};
            }
            VariantRecord rec;
            rec.accession = accession_;
            if (fields[0].empty()) throw LineError{"empty CHROM"};
            rec.chrom = fields[0];
            rec.pos = parse_pos(fields[1]);
            rec.id = fields[2].empty() ? "." : std::string(fields[2]);
            if (!is_valid_ref_allele(fields[3])) {
                throw LineError{"invalid REF '" + std::string(fields[3]) + "'"};
            }
            rec.ref_allele = fields[3];
            for (auto alt : split(fields[4], ',')) {
                if (alt.empty() || alt == ".") {
                    throw LineError{"missing ALT allele in '" + std::string(fields[4]) + "'"};
                }
                rec.alt_alleles.emplace_back(alt);
            }
            rec.qual = parse_qual(fields[5]);
            rec.filter = fields[6];
            rec.info = parse_info(fields[7]);
            for (std::size_t i = kMandatoryColumns; i < fields.size(); ++i) {
                rec.sample_columns.emplace_back(fields[i]);
            }
            if (const auto* ann = rec.find_info("ANN")) {
                std::size_t rejected = 0;
                rec.annotations = parse_ann_info(ann->value, &rejected);
                if (ann->value.empty()) {
                    report(Severity::warning, "empty ANN value");
                } else if (rejected > 0) {
                    report(Severity::warning,
                           std::to_string(rejected) + " malformed ANN entr" + (rejected == 1 ? "y" : "ies") +
                               " dropped");
                }
            }
            ++records_read_;
            return rec;
        } catch (const LineError& e) {
            report(Severity::error, e.message);
        }
    }
    if (in_.bad()) throw InputError("read error after line " + std::to_string(line_number_));
    return std::nullopt;
}

VcfParseResult parse_vcf(std::istream& in, const std::string& accession, ParseOptions options) {
    VcfReader reader(in, accession, options);
    VcfParseResult result;
    while (auto rec = reader.next()) result.records.push_back(std::move(*rec));
    result.header = reader.header();
    result.diagnostics = reader.diagnostics();
    return result;
}

std::string format_vcf_line(const VariantRecord& r) {
    std::string out;
    out.append(r.chrom).append("\t").append(std::to_string(r.pos)).append("\t");
    out.append(r.id).append("\t").append(r.ref_allele).append("\t");
    for (std::size_t i = 0; i < r.alt_alleles.size(); ++i) {
        if (i > 0) out.push_back(',');
        out.append(r.alt_alleles[i]);
    }
    out.append("\t").append(r.qual ? format_real(*r.qual) : ".").append("\t");
    out.append(r.filter).append("\t");
    if (r.info.empty()) out.push_back('.');
    for (std::size_t i = 0; i < r.info.size(); ++i) {
        if (i > 0) out.push_back(';');
        out.append(r.info[i].key);
        if (!r.info[i].flag) out.append("=").append(r.info[i].value);
    }
    for (const auto& col : r.sample_columns) out.append("\t").append(col);
    return out;
}

}  // namespace varkg
