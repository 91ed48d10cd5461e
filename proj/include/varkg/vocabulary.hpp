#pragma once

// IRIs used by the variant knowledge graph. VCF-derived facts use the
// vcf2rdf-style "sg://0.99.11/vcf2rdf/" vocabulary plus FALDO; CADD facts and
// the ontology live under "http://sg.org/".

#include <string>
#include <string_view>
#include <vector>

namespace varkg::vocab {

inline constexpr std::string_view kBase = "http://sg.org/";

// Ontology properties.
inline constexpr std::string_view kHasPos = "http://sg.org/has_pos";
inline constexpr std::string_view kHasRefGenome = "http://sg.org/has_ref_genome";
inline constexpr std::string_view kHasAltGenome = "http://sg.org/has_alt_genome";
inline constexpr std::string_view kHasVariantId = "http://sg.org/has_variant_id";
inline constexpr std::string_view kHasVariant = "http://sg.org/has_variant";
inline constexpr std::string_view kHasCaddScores = "http://sg.org/has_cadd_scores";
inline constexpr std::string_view kHasChromosomeNumber = "http://sg.org/has_chromosome_number";
inline constexpr std::string_view kHasNumber = "http://sg.org/has_number";
inline constexpr std::string_view kPhred = "http://sg.org/phred";
inline constexpr std::string_view kRawScore = "http://sg.org/raw_score";

// Ontology classes.
inline constexpr std::string_view kChromosome = "http://sg.org/Chromosome";
inline constexpr std::string_view kChromosomeNumber = "http://sg.org/chromosome_number";
inline constexpr std::string_view kVariant = "http://sg.org/variant";
inline constexpr std::string_view kCadd = "http://sg.org/CADD";
inline constexpr std::string_view kOrigin = "http://sg.org/Origin";
inline constexpr std::string_view kXrefLink = "http://sg.org/xref_link";
inline constexpr std::string_view kUrlLink = "http://sg.org/url_link";
inline constexpr std::string_view kStudyAttribute = "http://sg.org/study_attribute";
inline constexpr std::string_view kRunAttribute = "http://sg.org/run_attribute";
inline constexpr std::string_view kExperimentAttribute = "http://sg.org/experiment_attribute";

// Instance IRI prefixes.
inline constexpr std::string_view kChromosomeNodePrefix = "http://sg.org/chromosome/";
inline constexpr std::string_view kGraphPrefix = "sg://";
inline constexpr std::string_view kOriginScheme = "origin://";
inline constexpr std::string_view kAnnSubjectMarker = "#ann";

// vcf2rdf-style predicates.
inline constexpr std::string_view kFaldoPosition = "http://biohackathon.org/resource/faldo#position";
inline constexpr std::string_view kVcf2rdf = "sg://0.99.11/vcf2rdf/";
inline constexpr std::string_view kVcfRef = "sg://0.99.11/vcf2rdf/variant/REF";
inline constexpr std::string_view kVcfAlt = "sg://0.99.11/vcf2rdf/variant/ALT";
inline constexpr std::string_view kVcfId = "sg://0.99.11/vcf2rdf/variant/ID";
inline constexpr std::string_view kVcfQual = "sg://0.99.11/vcf2rdf/variant/QUAL";
inline constexpr std::string_view kVcfFilter = "sg://0.99.11/vcf2rdf/variant/FILTER";
inline constexpr std::string_view kSequencePrefix = "sg://0.99.11/vcf2rdf/sequence/";
inline constexpr std::string_view kAnnAllele = "sg://0.99.11/vcf2rdf/info/ANN/allele";
inline constexpr std::string_view kAnnEffect = "sg://0.99.11/vcf2rdf/info/ANN/effect";
inline constexpr std::string_view kAnnImpact = "sg://0.99.11/vcf2rdf/info/ANN/putative_impact";
inline constexpr std::string_view kAnnGeneName = "sg://0.99.11/vcf2rdf/info/ANN/gene_name";
inline constexpr std::string_view kAnnGeneId = "sg://0.99.11/vcf2rdf/info/ANN/gene_id";

// W3C / external.
inline constexpr std::string_view kRdfType = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kRdfProperty = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Property";
inline constexpr std::string_view kRdfsClass = "http://www.w3.org/2000/01/rdf-schema#Class";
inline constexpr std::string_view kRdfsSubClassOf = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr std::string_view kRdfsDomain = "http://www.w3.org/2000/01/rdf-schema#domain";
inline constexpr std::string_view kRdfsRange = "http://www.w3.org/2000/01/rdf-schema#range";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kXsdInt = "http://www.w3.org/2001/XMLSchema#int";
inline constexpr std::string_view kXsdInteger = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view kXsdLong = "http://www.w3.org/2001/XMLSchema#long";
inline constexpr std::string_view kXsdDecimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view kXsdDouble = "http://www.w3.org/2001/XMLSchema#double";
inline constexpr std::string_view kXsdString = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view kXsdBoolean = "http://www.w3.org/2001/XMLSchema#boolean";
inline constexpr std::string_view kWikidataChromosome = "http://www.wikidata.org/entity/Q37748";

/** The five ANN sub-field predicates, in positional order. */
const std::vector<std::string_view>& ann_predicates();

/** Every predicate IRI the emitters are allowed to produce. */
const std::vector<std::string_view>& predicates();
bool is_vocabulary_predicate(std::string_view iri);

/** Prefix map used for Turtle output ("ns1" -> kBase, plus rdf/rdfs/xsd/wd). */
std::vector<std::pair<std::string, std::string>> default_prefixes();

}  // namespace varkg::vocab
