#include "varkg/quad_store.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

#include "varkg/error.hpp"
#include "varkg/rdf_load.hpp"
#include "varkg/vocabulary.hpp"

namespace varkg {

// ---------------------------------------------------------------------------
// TermDictionary

std::size_t TermDictionary::ViewHash::operator()(const View& v) const noexcept {
    return hash_term(v.kind, v.value, v.datatype, v.language);
}

TermDictionary::TermDictionary() { intern(Term::default_graph()); }

TermId TermDictionary::intern(const Term& term) {
    if (auto it = ids_.find(view_of(term)); it != ids_.end()) return it->second;
    if (terms_.size() >= std::numeric_limits<TermId>::max()) throw InternalError("term dictionary full");
    auto id = static_cast<TermId>(terms_.size());
    terms_.push_back(term);
    ids_.emplace(view_of(terms_.back()), id);
    return id;
}

std::optional<TermId> TermDictionary::find(const Term& term) const {
    if (auto it = ids_.find(view_of(term)); it != ids_.end()) return it->second;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// QuadStore

std::size_t QuadStore::IdQuadHash::operator()(const IdQuad& q) const noexcept {
    std::uint64_t a = (std::uint64_t{q[0]} << 32) | q[1];
    std::uint64_t b = (std::uint64_t{q[2]} << 32) | q[3];
    a *= 0x9e3779b97f4a7c15ULL;
    b ^= a + 0x7f4a7c159e3779b9ULL + (b << 6) + (b >> 2);
    return static_cast<std::size_t>(a ^ (b * 0xbf58476d1ce4e5b9ULL));
}

QuadStore::QuadStore() {
    indexes_ = {
        {{kS, kP, kO, kG}, {}}, {{kP, kO, kS, kG}, {}}, {{kO, kS, kP, kG}, {}},
        {{kG, kS, kP, kO}, {}}, {{kG, kP, kO, kS}, {}}, {{kG, kO, kS, kP}, {}},
    };
}

std::size_t QuadStore::insert(std::span<const Quad> quads) {
    std::vector<IdQuad> fresh;
    for (const auto& q : quads) {
        IdQuad id{dict_.intern(q.subject), dict_.intern(q.predicate), dict_.intern(q.object),
                  q.graph ? dict_.intern(*q.graph) : kDefaultGraphId};
        if (quads_.insert(id).second) fresh.push_back(id);
    }
    if (fresh.empty()) return 0;
    for (auto& index : indexes_) {
        auto old_size = index.keys.size();
        for (const auto& q : fresh) {
            index.keys.push_back({q[index.order[0]], q[index.order[1]], q[index.order[2]], q[index.order[3]]});
        }
        std::sort(index.keys.begin() + static_cast<std::ptrdiff_t>(old_size), index.keys.end());
        std::inplace_merge(index.keys.begin(), index.keys.begin() + static_cast<std::ptrdiff_t>(old_size),
                           index.keys.end());
    }
    return fresh.size();
}

std::vector<Term> QuadStore::graphs() const {
    std::vector<Term> out;
    const auto& gspo = indexes_[3].keys;
    for (std::size_t i = 0; i < gspo.size(); ++i) {
        if (i == 0 || gspo[i][0] != gspo[i - 1][0]) out.push_back(dict_.term(gspo[i][0]));
    }
    return out;
}

std::pair<std::size_t, std::pair<std::size_t, std::size_t>> QuadStore::best_range(
    const std::array<std::optional<TermId>, 4>& pattern) const {
    std::size_t best = 0, best_len = 0;
    for (std::size_t i = 0; i < indexes_.size(); ++i) {
        std::size_t len = 0;
        while (len < 4 && pattern[indexes_[i].order[len]]) ++len;
        if (len > best_len) {
            best = i;
            best_len = len;
        }
    }
    const auto& index = indexes_[best];
    IdQuad prefix{};
    for (std::size_t k = 0; k < best_len; ++k) prefix[k] = *pattern[index.order[k]];
    auto less_prefix = [best_len](const IdQuad& a, const IdQuad& b) {
        for (std::size_t k = 0; k < best_len; ++k) {
            if (a[k] != b[k]) return a[k] < b[k];
        }
        return false;
    };
    auto [lo, hi] = std::equal_range(index.keys.begin(), index.keys.end(), prefix, less_prefix);
    return {best, {static_cast<std::size_t>(lo - index.keys.begin()), static_cast<std::size_t>(hi - index.keys.begin())}};
}

std::size_t QuadStore::estimate(const std::array<std::optional<TermId>, 4>& pattern) const {
    auto [idx, range] = best_range(pattern);
    return range.second - range.first;
}

std::vector<IdQuad> QuadStore::scan(const std::array<std::optional<TermId>, 4>& pattern) const {
    auto [idx, range] = best_range(pattern);
    const auto& index = indexes_[idx];
    std::vector<IdQuad> out;
    for (std::size_t i = range.first; i < range.second; ++i) {
        IdQuad q{};
        for (std::size_t k = 0; k < 4; ++k) q[index.order[k]] = index.keys[i][k];
        bool ok = true;
        for (std::size_t slot = 0; slot < 4 && ok; ++slot) {
            if (pattern[slot] && *pattern[slot] != q[slot]) ok = false;
        }
        if (ok) out.push_back(q);
    }
    return out;
}

namespace {

constexpr int kConstant = -1;

struct CompiledPattern {
    std::array<int, 4> var{};          // variable index per slot, or kConstant
    std::array<TermId, 4> constant{};  // valid where var == kConstant
};

}  // namespace

std::vector<Binding> QuadStore::match(std::span<const Pattern> patterns) const {
    std::vector<Binding> results;
    if (patterns.empty()) return results;

    std::vector<std::string> names;
    auto var_index = [&names](const std::string& name) {
        auto it = std::find(names.begin(), names.end(), name);
        if (it != names.end()) return static_cast<int>(it - names.begin());
        names.push_back(name);
        return static_cast<int>(names.size() - 1);
    };

    std::vector<CompiledPattern> compiled;
    for (const auto& p : patterns) {
        CompiledPattern c;
        const PatternSlot* slots[4] = {&p.subject, &p.predicate, &p.object, &p.graph};
        for (std::size_t k = 0; k < 4; ++k) {
            if (slots[k]->is_variable) {
                c.var[k] = var_index(slots[k]->variable);
            } else {
                auto id = dict_.find(slots[k]->term);
                if (!id) return results;  // unknown constant: nothing can match
                c.var[k] = kConstant;
                c.constant[k] = *id;
            }
        }
        compiled.push_back(c);
    }

    // Greedy join order.
    std::vector<std::size_t> static_estimate;
    for (const auto& c : compiled) {
        std::array<std::optional<TermId>, 4> pat;
        for (std::size_t k = 0; k < 4; ++k) {
            if (c.var[k] == kConstant) pat[k] = c.constant[k];
        }
        static_estimate.push_back(estimate(pat));
    }
    std::vector<std::size_t> order;
    std::vector<bool> placed(compiled.size(), false), var_bound(names.size(), false);
    while (order.size() < compiled.size()) {
        std::size_t pick = compiled.size();
        bool pick_connected = false;
        for (std::size_t i = 0; i < compiled.size(); ++i) {
            if (placed[i]) continue;
            bool connected = std::any_of(compiled[i].var.begin(), compiled[i].var.end(),
                                         [&](int v) { return v != kConstant && var_bound[v]; });
            bool better = pick == compiled.size() || (connected && !pick_connected) ||
                          (connected == pick_connected && static_estimate[i] < static_estimate[pick]);
            if (better) {
                pick = i;
                pick_connected = connected;
            }
        }
        placed[pick] = true;
        order.push_back(pick);
        for (int v : compiled[pick].var) {
            if (v != kConstant) var_bound[v] = true;
        }
    }

    std::vector<std::optional<TermId>> binding(names.size());
    auto recurse = [&](auto&& self, std::size_t depth) -> void {
        if (depth == order.size()) {
            Binding b;
            for (std::size_t v = 0; v < names.size(); ++v) b.emplace(names[v], dict_.term(*binding[v]));
            results.push_back(std::move(b));
            return;
        }
        const auto& c = compiled[order[depth]];
        std::array<std::optional<TermId>, 4> pat;
        for (std::size_t k = 0; k < 4; ++k) {
            pat[k] = c.var[k] == kConstant ? std::optional<TermId>(c.constant[k]) : binding[c.var[k]];
        }
        for (const auto& q : scan(pat)) {
            std::vector<int> newly;
            bool ok = true;
            for (std::size_t k = 0; k < 4 && ok; ++k) {
                int v = c.var[k];
                if (v == kConstant) continue;
                if (binding[v]) {
                    ok = *binding[v] == q[k];
                } else {
                    binding[v] = q[k];
                    newly.push_back(v);
                }
            }
            if (ok) self(self, depth + 1);
            for (int v : newly) binding[v].reset();
        }
    };
    recurse(recurse, 0);
    return results;
}

std::vector<Term> QuadStore::objects(const Term& subject, std::string_view predicate, const Term& graph) const {
    std::vector<Term> out;
    auto s = dict_.find(subject);
    auto p = dict_.find(Term::iri(std::string(predicate)));
    auto g = dict_.find(graph);
    if (!s || !p || !g) return out;
    for (const auto& q : scan({s, p, std::nullopt, g})) out.push_back(dict_.term(q[kO]));
    return out;
}

std::vector<Quad> QuadStore::all_quads() const {
    std::vector<Quad> out;
    out.reserve(size());
    for (const auto& k : indexes_[0].keys) {
        Quad q{dict_.term(k[0]), dict_.term(k[1]), dict_.term(k[2]), std::nullopt};
        if (k[3] != kDefaultGraphId) q.graph = dict_.term(k[3]);
        out.push_back(std::move(q));
    }
    return out;
}

bool is_connected(std::span<const Pattern> patterns) {
    if (patterns.size() <= 1) return true;
    auto vars = [](const Pattern& p) {
        std::set<std::string> v;
        for (const auto* s : {&p.subject, &p.predicate, &p.object, &p.graph}) {
            if (s->is_variable) v.insert(s->variable);
        }
        return v;
    };
    std::vector<std::set<std::string>> sets;
    for (const auto& p : patterns) sets.push_back(vars(p));
    std::vector<bool> reached(patterns.size(), false);
    std::set<std::string> frontier = sets[0];
    reached[0] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (reached[i]) continue;
            bool shares = std::any_of(sets[i].begin(), sets[i].end(), [&](const auto& v) { return frontier.count(v); });
            if (shares) {
                reached[i] = true;
                frontier.insert(sets[i].begin(), sets[i].end());
                grew = true;
            }
        }
    }
    return std::all_of(reached.begin(), reached.end(), [](bool r) { return r; });
}

namespace {

std::vector<std::string> pattern_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) break;
        std::size_t start = i;
        if (text[i] == '"') {
            ++i;
            while (i < text.size() && text[i] != '"') i += text[i] == '\\' ? 2 : 1;
            ++i;
        }
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        tokens.emplace_back(text.substr(start, std::min(i, text.size()) - start));
    }
    return tokens;
}

}  // namespace

Pattern parse_pattern(std::string_view text, std::size_t index) {
    auto tokens = pattern_tokens(text);
    if (!tokens.empty() && tokens.back() == ".") tokens.pop_back();
    if (tokens.size() != 3 && tokens.size() != 4) {
        throw InputError("pattern needs 3 or 4 terms: '" + std::string(text) + "'");
    }
    std::string prologue;
    for (const auto& [name, ns] : vocab::default_prefixes()) prologue += "@prefix " + name + ": <" + ns + "> .\n";
    prologue += "@prefix faldo: <http://biohackathon.org/resource/faldo#> .\n";
    prologue += "@prefix vcf: <" + std::string(vocab::kVcf2rdf) + "> .\n";

    auto slot = [&](const std::string& tok, int position) -> PatternSlot {
        if (tok.size() > 1 && tok[0] == '?') return PatternSlot::var(tok.substr(1));
        if (position == 1 && tok == "a") return PatternSlot::iri(vocab::kRdfType);
        // Reuse the Turtle reader for constants: "<x> <x> TOKEN ." or "TOKEN <x> <x> ."
        std::string doc = prologue + (position == 2 ? "<urn:s> <urn:p> " + tok : tok + " <urn:p> <urn:o>") + " .";
        try {
            auto q = parse_turtle(doc);
            if (q.size() != 1) throw InputError("bad pattern term '" + tok + "'");
            return PatternSlot::constant(position == 2 ? q[0].object : q[0].subject);
        } catch (const ParseError&) {
            throw InputError("bad pattern term '" + tok + "'");
        }
    };
    Pattern p;
    p.subject = slot(tokens[0], 0);
    p.predicate = slot(tokens[1], 1);
    p.object = slot(tokens[2], 2);
    p.graph = tokens.size() == 4 ? slot(tokens[3], 3) : PatternSlot::var("_g" + std::to_string(index));
    return p;
}

}  // namespace varkg
