#pragma once

// Core variant types shared across the pipeline.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace varkg {

/**
 * One SnpEff ANN entry. The first five pipe-separated sub-fields are bound by
 * position; everything after gene_id is kept verbatim in extra_fields.
 */
struct AnnAnnotation {
    std::string allele;
    std::string effect;
    std::string putative_impact;  // HIGH / MODERATE / LOW / MODIFIER
    std::string gene_name;
    std::string gene_id;
    std::vector<std::string> extra_fields;

    bool operator==(const AnnAnnotation&) const = default;
};

/** Raw INFO entry. Flag keys (no '=') carry an empty value and flag = true. */
struct InfoEntry {
    std::string key;
    std::string value;
    bool flag = false;

    bool operator==(const InfoEntry&) const = default;
};

/**
 * One parsed VCF data line. Multi-allelic lines keep all ALT alleles here;
 * downstream code treats each (record, alt index) pair as its own variant.
 */
struct VariantRecord {
    std::string chrom;
    std::int64_t pos = 0;  // 1-based
    std::string id = ".";
    std::string ref_allele;
    std::vector<std::string> alt_alleles;
    std::optional<double> qual;
    std::string filter;
    std::vector<InfoEntry> info;  // original order
    std::vector<AnnAnnotation> annotations;
    std::vector<std::string> sample_columns;  // FORMAT + samples, uninterpreted
    std::string accession;

    bool has_id() const { return !id.empty() && id != "."; }
    const InfoEntry* find_info(std::string_view key) const;

    bool operator==(const VariantRecord&) const = default;
};

struct CaddRecord {
    std::string chrom;
    std::int64_t pos = 0;
    std::string ref_allele;
    std::string alt_allele;
    double raw_score = 0.0;
    double phred = 0.0;

    bool operator==(const CaddRecord&) const = default;
};

inline constexpr int kNumCaddCategories = 5;

/** CADD raw-score class in [0, 4]. */
struct CaddCategory {
    int value = 0;

    bool operator==(const CaddCategory&) const = default;
};

/**
 * Bins a raw CADD score into half-open ranges:
 *   (-inf,0) -> 0, [0,1) -> 1, [1,5) -> 2, [5,10) -> 3, [10,inf) -> 4.
 * Throws std::invalid_argument("invalid score") for NaN or infinities.
 */
CaddCategory bin_cadd_score(double raw);

/**
 * Cross-accession join key for one ALT allele: the VCF ID when present,
 * otherwise "chrom:pos:ref>alt". Throws std::out_of_range for a bad index.
 */
std::string variant_key(const VariantRecord& record, std::size_t alt_index);

/** Same rule on loose fields, used when rebuilding rows from the store. */
std::string variant_key(std::string_view id, std::string_view chrom, std::int64_t pos,
                        std::string_view ref, std::string_view alt);

/** True for a non-empty string over A, C, G, T, N. */
bool is_valid_ref_allele(std::string_view allele);

/**
 * Orders chromosome names 1..22 numerically, then non-numeric names
 * lexicographically (X, Y, MT, contigs).
 */
bool chrom_less(std::string_view a, std::string_view b);

/** Shortest fixed-notation rendering that parses back to the same double. */
std::string format_real(double value);

}  // namespace varkg
