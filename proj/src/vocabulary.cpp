#include "varkg/vocabulary.hpp"

#include <algorithm>

namespace varkg::vocab {

const std::vector<std::string_view>& ann_predicates() {
    static const std::vector<std::string_view> preds = {kAnnAllele, kAnnEffect, kAnnImpact,
                                                        kAnnGeneName, kAnnGeneId};
    return preds;
}

const std::vector<std::string_view>& predicates() {
    static const std::vector<std::string_view> preds = [] {
        std::vector<std::string_view> p = {
            kHasPos,      kHasRefGenome, kHasAltGenome,   kHasVariantId,   kHasVariant,
            kHasCaddScores, kHasChromosomeNumber, kHasNumber, kPhred,      kRawScore,
            kFaldoPosition, kVcfRef,     kVcfAlt,         kVcfId,          kVcfQual,
            kVcfFilter,   kRdfType,      kRdfsSubClassOf, kRdfsDomain,     kRdfsRange};
        for (auto a : ann_predicates()) p.push_back(a);
        std::sort(p.begin(), p.end());
        return p;
    }();
    return preds;
}

bool is_vocabulary_predicate(std::string_view iri) {
    const auto& p = predicates();
    return std::binary_search(p.begin(), p.end(), iri);
}

std::vector<std::pair<std::string, std::string>> default_prefixes() {
    return {{"ns1", std::string(kBase)},
            {"rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"},
            {"rdfs", "http://www.w3.org/2000/01/rdf-schema#"},
            {"wd", "http://www.wikidata.org/entity/"},
            {"xsd", std::string(kXsd)}};
}

}  // namespace varkg::vocab
