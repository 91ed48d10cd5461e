#pragma once

#include <istream>
#include <optional>
#include <vector>

#include "varkg/genomic_model.hpp"
#include "varkg/parse_common.hpp"

namespace varkg {

/**
 * Streaming reader for CADD score TSVs. "##" lines are comments; the first
 * other line is the column header ("#Chrom Pos Ref Alt RawScore PHRED", the
 * leading '#' optional, names matched case-insensitively, extra columns
 * ignored). Throws ParseError when a required column is missing.
 */
class CaddReader {
public:
    explicit CaddReader(std::istream& in, ParseOptions options = {});

    std::optional<CaddRecord> next();
    const std::vector<ParseDiagnostic>& diagnostics() const { return diagnostics_; }

private:
    void report(Severity severity, std::string message);

    std::istream& in_;
    ParseOptions options_;
    std::vector<ParseDiagnostic> diagnostics_;
    std::string line_;
    std::size_t line_number_ = 0;
    std::size_t n_columns_ = 0;
    std::size_t col_chrom_ = 0, col_pos_ = 0, col_ref_ = 0, col_alt_ = 0, col_raw_ = 0, col_phred_ = 0;
};

struct CaddParseResult {
    std::vector<CaddRecord> records;
    std::vector<ParseDiagnostic> diagnostics;
};

CaddParseResult parse_cadd_tsv(std::istream& in, ParseOptions options = {});

}  // namespace varkg
