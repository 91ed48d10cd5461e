#include "varkg/rdf_term.hpp"

#include "varkg/rdf_serialize.hpp"

namespace varkg {

std::size_t hash_term(TermKind kind, std::string_view value, std::string_view datatype,
                      std::string_view language) noexcept {
    std::size_t h = std::hash<std::string_view>{}(value);
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    mix(static_cast<std::size_t>(kind));
    if (!datatype.empty()) mix(std::hash<std::string_view>{}(datatype));
    if (!language.empty()) mix(std::hash<std::string_view>{}(language));
    return h;
}

std::string to_string(const Term& term) { return format_term_nt(term); }

std::string to_string(const Quad& quad) {
    std::string out = format_term_nt(quad.subject) + " " + format_term_nt(quad.predicate) + " " +
                      format_term_nt(quad.object);
    if (quad.graph && !quad.graph->is_default_graph()) out += " " + format_term_nt(*quad.graph);
    return out + " .";
}

}  // namespace varkg
