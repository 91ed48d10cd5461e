#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "varkg/rdf_term.hpp"

namespace varkg {

using TermId = std::uint32_t;

/** Id of the default graph; quads without a graph land there. */
inline constexpr TermId kDefaultGraphId = 0;

/**
 * Interning dictionary. Each distinct term is stored exactly once; lookups go
 * through views into that single copy. Id 0 is the default graph.
 */
class TermDictionary {
public:
    TermDictionary();

    TermId intern(const Term& term);
    std::optional<TermId> find(const Term& term) const;
    const Term& term(TermId id) const { return terms_.at(id); }
    std::size_t size() const { return terms_.size(); }

private:
    struct View {
        TermKind kind;
        std::string_view value, datatype, language;
        bool operator==(const View&) const = default;
    };
    struct ViewHash {
        std::size_t operator()(const View& v) const noexcept;
    };
    static View view_of(const Term& t) { return {t.kind, t.value, t.datatype, t.language}; }

    std::deque<Term> terms_;  // stable addresses, so views stay valid
    std::unordered_map<View, TermId, ViewHash> ids_;
};

/** Quad of dictionary ids in (subject, predicate, object, graph) order. */
using IdQuad = std::array<TermId, 4>;
inline constexpr std::size_t kS = 0, kP = 1, kO = 2, kG = 3;

/** One slot of a quad pattern: a constant term or a named variable. */
struct PatternSlot {
    bool is_variable = true;
    std::string variable;
    Term term;

    static PatternSlot var(std::string name) { return {true, std::move(name), {}}; }
    static PatternSlot constant(Term t) { return {false, {}, std::move(t)}; }
    static PatternSlot iri(std::string_view v) { return constant(Term::iri(std::string(v))); }
};

struct Pattern {
    PatternSlot subject, predicate, object, graph;
};

using Binding = std::map<std::string, Term>;

/**
 * In-memory named-graph store with six sorted permutation indexes
 * (SPOG, POSG, OSPG, GSPO, GPOS, GOSP). Inserts have set semantics. Each
 * insert() call merges its new quads into every index before returning, so a
 * loaded store can be queried concurrently through the const interface.
 */
class QuadStore {
public:
    QuadStore();

    /** Returns the number of quads that were not already present. */
    std::size_t insert(std::span<const Quad> quads);

    std::size_t size() const { return quads_.size(); }
    const TermDictionary& dictionary() const { return dict_; }

    /** Distinct graph terms present in the store (default graph included if used). */
    std::vector<Term> graphs() const;

    /**
     * All quads matching the id pattern; unbound slots hold std::nullopt.
     * Picks the index whose sort order has the longest bound prefix.
     */
    std::vector<IdQuad> scan(const std::array<std::optional<TermId>, 4>& pattern) const;

    /** Upper bound on scan() size for the pattern, from the index prefix range. */
    std::size_t estimate(const std::array<std::optional<TermId>, 4>& pattern) const;

    /**
     * Conjunctive basic-graph-pattern match. Patterns are reordered greedily:
     * smallest estimated cardinality first, preferring patterns that share a
     * variable with those already placed. Constants unknown to the store
     * yield an empty result.
     */
    std::vector<Binding> match(std::span<const Pattern> patterns) const;

    /** Objects of (subject, predicate) within one graph. */
    std::vector<Term> objects(const Term& subject, std::string_view predicate, const Term& graph) const;

    /** Every quad, in SPOG index order (for tests and export). */
    std::vector<Quad> all_quads() const;

private:
    struct Index {
        std::array<std::size_t, 4> order;  // index position -> quad slot
        std::vector<IdQuad> keys;          // permuted
    };

    struct IdQuadHash {
        std::size_t operator()(const IdQuad& q) const noexcept;
    };

    std::pair<std::size_t, std::pair<std::size_t, std::size_t>> best_range(
        const std::array<std::optional<TermId>, 4>& pattern) const;

    TermDictionary dict_;
    std::unordered_set<IdQuad, IdQuadHash> quads_;
    std::vector<Index> indexes_;
};

/** True when every pattern shares a variable with some other (or there is only one). */
bool is_connected(std::span<const Pattern> patterns);

/**
 * Parses a pattern written as 3 or 4 whitespace-separated tokens: "?name"
 * variables, <iri>, prefixed names from the vocabulary prefixes, "a", or
 * quoted literals. A missing graph slot becomes the variable "?_g<index>".
 */
Pattern parse_pattern(std::string_view text, std::size_t index);

}  // namespace varkg
