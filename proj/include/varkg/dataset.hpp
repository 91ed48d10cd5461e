#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "varkg/quad_store.hpp"

namespace varkg {

/** One (accession, variant allele, ANN entry) row pulled out of the graph. */
struct DatasetRow {
    std::string accession;
    std::string variant_key;
    std::string chrom;
    std::int64_t pos = 0;
    std::string ref;
    std::string alt;
    std::optional<double> qual;
    std::string filter;
    std::string ann_allele;
    std::string ann_effect;
    std::string ann_impact;
    std::string gene_name;
    std::string gene_id;
    std::optional<double> raw_score;
    std::optional<double> phred;

    bool operator==(const DatasetRow&) const = default;
};

/**
 * Joins VCF-derived quads (per origin subject: position, REF, ALT, chromosome
 * linkage, optional ID/QUAL/FILTER/ANN) with CADD triples matched on
 * (accession, chrom, pos, ref, alt). One row per ANN entry, or a single row
 * with empty ANN fields when the allele has none. Rows are sorted by
 * accession, chromosome, position, alt.
 */
std::vector<DatasetRow> extract_dataset(const QuadStore& store);

/** Tab-separated export with a header line; absent numbers are written as ".". */
void write_dataset_tsv(std::span<const DatasetRow> rows, std::ostream& out);

/** One JSON object per line; absent numbers are null. */
void write_dataset_jsonl(std::span<const DatasetRow> rows, std::ostream& out);

}  // namespace varkg
