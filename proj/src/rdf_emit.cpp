#include "varkg/rdf_emit.hpp"

#include <openssl/evp.h>

#include <array>
#include <stdexcept>

#include "varkg/vocabulary.hpp"

namespace varkg {

namespace {

Term iri(std::string_view v) { return Term::iri(std::string(v)); }

Quad triple(std::string_view s, std::string_view p, std::string_view o) {
    return {iri(s), iri(p), iri(o), std::nullopt};
}

Term sequence_iri(std::string_view allele) {
    return Term::iri(std::string(vocab::kSequencePrefix) + std::string(allele));
}

}  // namespace

std::vector<Quad> emit_ontology() {
    using namespace vocab;
    std::vector<Quad> q;
    auto property = [&q](std::string_view p, std::string_view domain, std::string_view range) {
        q.push_back(triple(p, kRdfType, kRdfProperty));
        q.push_back(triple(p, kRdfsDomain, domain));
        q.push_back(triple(p, kRdfsRange, range));
    };
    auto cls = [&q](std::string_view c) { q.push_back(triple(c, kRdfType, kRdfsClass)); };

    q.push_back(triple(kChromosome, kRdfType, kWikidataChromosome));
    q.push_back(triple(kChromosome, kRdfsSubClassOf, kWikidataChromosome));
    property(kHasChromosomeNumber, kChromosome, kChromosomeNumber);
    cls(kChromosomeNumber);
    property(kHasNumber, kChromosomeNumber, kXsdInt);
    cls(kVariant);
    property(kHasVariant, kChromosome, kVariant);
    property(kHasPos, kVariant, kXsdInt);
    property(kHasRefGenome, kVariant, kXsdString);
    property(kHasAltGenome, kVariant, kXsdString);
    property(kHasVariantId, kVariant, kXsdString);
    cls(kCadd);
    property(kHasCaddScores, kVariant, kCadd);
    property(kRawScore, kCadd, kXsdLong);
    property(kPhred, kCadd, kXsdLong);
    for (auto c : {kOrigin, kXrefLink, kUrlLink, kStudyAttribute, kRunAttribute, kExperimentAttribute}) {
        cls(c);
    }
    return q;
}

Term accession_graph(std::string_view accession) {
    return Term::iri(std::string(vocab::kGraphPrefix) + std::string(accession));
}

std::string md5_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_md5(), nullptr) != 1 || len != 16) {
        throw std::runtime_error("MD5 digest failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out(32, '0');
    for (unsigned i = 0; i < 16; ++i) {
        out[2 * i] = kHex[digest[i] >> 4];
        out[2 * i + 1] = kHex[digest[i] & 0xf];
    }
    return out;
}

std::string decimal_lexical(double value) {
    std::string s = format_real(value);
    if (s.find('.') == std::string::npos) s += ".0";
    return s;
}

Term origin_iri(const VariantRecord& r, std::size_t alt_index) {
    if (alt_index >= r.alt_alleles.size()) throw std::out_of_range("alt index out of range");
    std::string canonical = r.accession + '\t' + r.chrom + '\t' + std::to_string(r.pos) + '\t' +
                            r.ref_allele + '\t' + r.alt_alleles[alt_index];
    return Term::iri(std::string(vocab::kOriginScheme) + md5_hex(canonical) + "@" +
                     std::to_string(alt_index));
}

Term ann_subject(const Term& origin, std::size_t ordinal) {
    return Term::iri(origin.value + std::string(vocab::kAnnSubjectMarker) + std::to_string(ordinal));
}

std::size_t ann_allele_index(const VariantRecord& r, const AnnAnnotation& ann) {
    for (std::size_t i = 0; i < r.alt_alleles.size(); ++i) {
        if (r.alt_alleles[i] == ann.allele) return i;
    }
    return 0;
}

std::vector<Quad> variant_to_quads(const VariantRecord& r, const Term& graph) {
    using namespace vocab;
    std::vector<Quad> out;
    const Term chromosome = Term::iri(std::string(kChromosomeNodePrefix) + r.chrom);
    std::vector<std::size_t> ann_owner;
    ann_owner.reserve(r.annotations.size());
    for (const auto& ann : r.annotations) ann_owner.push_back(ann_allele_index(r, ann));

    for (std::size_t a = 0; a < r.alt_alleles.size(); ++a) {
        const Term origin = origin_iri(r, a);
        auto add = [&](const Term& s, std::string_view p, Term o) {
            out.push_back({s, iri(p), std::move(o), graph});
        };
        add(origin, kFaldoPosition, Term::literal(std::to_string(r.pos), std::string(kXsdInteger)));
        add(origin, kVcfRef, sequence_iri(r.ref_allele));
        add(origin, kVcfAlt, sequence_iri(r.alt_alleles[a]));
        if (r.has_id()) add(origin, kVcfId, Term::literal(r.id));
        if (r.qual) add(origin, kVcfQual, Term::literal(decimal_lexical(*r.qual), std::string(kXsdDecimal)));
        add(origin, kVcfFilter, Term::literal(r.filter));
        std::size_t ordinal = 0;
        for (std::size_t i = 0; i < r.annotations.size(); ++i) {
            if (ann_owner[i] != a) continue;
            const auto& ann = r.annotations[i];
            const Term subject = ann_subject(origin, ++ordinal);
            add(subject, kAnnAllele, Term::literal(ann.allele));
            add(subject, kAnnEffect, Term::literal(ann.effect));
            add(subject, kAnnImpact, Term::literal(ann.putative_impact));
            add(subject, kAnnGeneName, Term::literal(ann.gene_name));
            add(subject, kAnnGeneId, Term::literal(ann.gene_id));
        }
        add(chromosome, kHasVariant, origin);
        add(chromosome, kHasChromosomeNumber, Term::literal(r.chrom));
    }
    return out;
}

std::string cadd_subject_iri(std::string_view accession, std::string_view chrom, std::size_t ordinal) {
    std::string s(vocab::kBase);
    s.append(accession).append("/").append(chrom).append("/variant").append(std::to_string(ordinal));
    return s;
}

std::vector<Quad> cadd_to_triples(const CaddRecord& r, std::string_view accession, std::size_t ordinal) {
    using namespace vocab;
    const Term subject = Term::iri(cadd_subject_iri(accession, r.chrom, ordinal));
    const Term scores = Term::iri(subject.value + "/cadd");
    auto t = [](const Term& s, std::string_view p, Term o) { return Quad{s, iri(p), std::move(o), std::nullopt}; };
    return {
        t(subject, kRdfType, iri(kVariant)),
        t(subject, kHasPos, Term::literal(std::to_string(r.pos), std::string(kXsdInteger))),
        t(subject, kHasRefGenome, Term::literal(r.ref_allele)),
        t(subject, kHasAltGenome, Term::literal(r.alt_allele)),
        t(subject, kHasCaddScores, scores),
        t(scores, kRdfType, iri(kCadd)),
        t(scores, kRawScore, Term::literal(decimal_lexical(r.raw_score), std::string(kXsdDecimal))),
        t(scores, kPhred, Term::literal(decimal_lexical(r.phred), std::string(kXsdDecimal))),
    };
}

}  // namespace varkg
