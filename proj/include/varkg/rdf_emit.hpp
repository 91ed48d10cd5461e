#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "varkg/genomic_model.hpp"
#include "varkg/rdf_term.hpp"

namespace varkg {

/** Class/property declarations (type, subClassOf, domain, range) of the ontology. */
std::vector<Quad> emit_ontology();

/** Named graph for an accession: "sg://<accession>". */
Term accession_graph(std::string_view accession);

/**
 * "origin://<md5 hex>@<alt_index>", hashing "accession\tchrom\tpos\tref\talt".
 * Throws std::out_of_range for a bad alt index.
 */
Term origin_iri(const VariantRecord& record, std::size_t alt_index);

/** Subject carrying the sub-fields of the ordinal-th (1-based) ANN entry of an allele. */
Term ann_subject(const Term& origin, std::size_t ordinal);

/** Lowercase hex MD5 of the input (32 characters). */
std::string md5_hex(std::string_view data);

/** Lexical form for an xsd:decimal literal (always contains a '.'). */
std::string decimal_lexical(double value);

/**
 * Quads for every ALT allele of a record, all in `graph`. Per allele:
 * FALDO position, REF, ALT, ID (if present), QUAL (if present), FILTER, five
 * quads per ANN entry attached to that allele, and the chromosome linkage
 * pair (has_variant, has_chromosome_number).
 *
 * An ANN entry attaches to the ALT allele with the same text, or to the first
 * allele when none matches, so each entry is emitted exactly once.
 */
std::vector<Quad> variant_to_quads(const VariantRecord& record, const Term& graph);

/** Index of the ALT allele an annotation is attached to. */
std::size_t ann_allele_index(const VariantRecord& record, const AnnAnnotation& ann);

/** "http://sg.org/<accession>/<chrom>/variant<ordinal>" */
std::string cadd_subject_iri(std::string_view accession, std::string_view chrom, std::size_t ordinal);

/** Graph-less CADD triples for one row; ordinal is 1-based within (accession, chrom). */
std::vector<Quad> cadd_to_triples(const CaddRecord& record, std::string_view accession,
                                  std::size_t ordinal);

/** Hands out 1-based ordinals per chromosome in stream order. */
class CaddOrdinals {
public:
    std::size_t next(const std::string& chrom) { return ++counters_[chrom]; }

private:
    std::map<std::string, std::size_t> counters_;
};

}  // namespace varkg
