#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace varkg {

enum class TermKind : std::uint8_t { iri, literal, blank };

/**
 * RDF term. Literals carry at most one of datatype / language; a literal with
 * neither is a plain string literal. The IRI with an empty value is reserved
 * for the default graph and never appears in serialized output.
 */
struct Term {
    TermKind kind = TermKind::iri;
    std::string value;
    std::string datatype;
    std::string language;

    static Term iri(std::string value) { return {TermKind::iri, std::move(value), {}, {}}; }
    static Term blank(std::string label) { return {TermKind::blank, std::move(label), {}, {}}; }
    static Term literal(std::string lexical, std::string datatype = {}) {
        return {TermKind::literal, std::move(lexical), std::move(datatype), {}};
    }
    static Term lang_literal(std::string lexical, std::string language) {
        return {TermKind::literal, std::move(lexical), {}, std::move(language)};
    }
    static Term default_graph() { return iri({}); }

    bool is_iri() const { return kind == TermKind::iri; }
    bool is_literal() const { return kind == TermKind::literal; }
    bool is_blank() const { return kind == TermKind::blank; }
    bool is_default_graph() const { return kind == TermKind::iri && value.empty(); }

    auto operator<=>(const Term&) const = default;
    bool operator==(const Term&) const = default;
};

/** RDF statement; graph is set for N-Quads output and unset for Turtle. */
struct Quad {
    Term subject;
    Term predicate;
    Term object;
    std::optional<Term> graph;

    auto operator<=>(const Quad&) const = default;
    bool operator==(const Quad&) const = default;
};

std::size_t hash_term(TermKind kind, std::string_view value, std::string_view datatype,
                      std::string_view language) noexcept;

/** Debug rendering in N-Triples syntax. */
std::string to_string(const Term& term);
std::string to_string(const Quad& quad);

}  // namespace varkg

template <>
struct std::hash<varkg::Term> {
    std::size_t operator()(const varkg::Term& t) const noexcept {
        return varkg::hash_term(t.kind, t.value, t.datatype, t.language);
    }
};
