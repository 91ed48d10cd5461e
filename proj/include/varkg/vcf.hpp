#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "varkg/genomic_model.hpp"
#include "varkg/parse_common.hpp"

namespace varkg {

struct VcfHeader {
    std::vector<std::string> meta_lines;  // "##..." verbatim
    std::string column_line;              // "#CHROM ..."
    std::vector<std::string> sample_names;
};

/**
 * Streaming VCF reader. The constructor consumes the header and throws
 * ParseError if the "#CHROM" column line is missing or has fewer than the
 * eight mandatory columns. Records are then pulled one at a time with next(),
 * so memory stays flat regardless of file length.
 *
 * In lenient mode a malformed data line is skipped and recorded as an
 * error-level diagnostic; in strict mode it throws ParseError instead.
 */
class VcfReader {
public:
    VcfReader(std::istream& in, std::string accession, ParseOptions options = {});

    const VcfHeader& header() const { return header_; }
    std::optional<VariantRecord> next();
    const std::vector<ParseDiagnostic>& diagnostics() const { return diagnostics_; }
    std::size_t records_read() const { return records_read_; }

private:
    void read_header();
    void report(Severity severity, std::string message);

    std::istream& in_;
    std::string accession_;
    ParseOptions options_;
    VcfHeader header_;
    std::vector<ParseDiagnostic> diagnostics_;
    std::string line_;
    std::size_t line_number_ = 0;
    std::size_t records_read_ = 0;
};

struct VcfParseResult {
    VcfHeader header;
    std::vector<VariantRecord> records;
    std::vector<ParseDiagnostic> diagnostics;
};

/** Reads a whole VCF stream into memory. */
VcfParseResult parse_vcf(std::istream& in, const std::string& accession, ParseOptions options = {});

/**
 * Splits a SnpEff ANN value into annotations. Entries are comma-separated and
 * their sub-fields pipe-separated. Entries with fewer than two sub-fields, or
 * an empty allele or effect, are dropped and counted in *rejected when given.
 */
std::vector<AnnAnnotation> parse_ann_info(std::string_view value, std::size_t* rejected = nullptr);

/** Re-serializes a record as a tab-separated VCF data line (no newline). */
std::string format_vcf_line(const VariantRecord& record);

}  // namespace varkg
