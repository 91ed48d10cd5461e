#include "varkg/rdf_serialize.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <regex>
#include <stdexcept>
#include <unordered_map>

#include "varkg/vocabulary.hpp"

namespace varkg {

namespace {

void append_uchar(std::string& out, unsigned char c) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "\\u%04X", c);
    out += buf;
}

std::string escape_iri(std::string_view iri) {
    std::string out;
    out.reserve(iri.size());
    for (unsigned char c : iri) {
        if (c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' ||
            c == '^' || c == '`' || c == '\\') {
            append_uchar(out, c);
        } else {
            out.push_back(static_cast<char>(c));
        }
    }
    return out;
}

std::string escape_literal(std::string_view text) {
    std::string out;
    out.reserve(text.size() + 2);
    for (unsigned char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            default:
                if (c < 0x20 || c == 0x7f) {
                    append_uchar(out, c);
                } else {
                    out.push_back(static_cast<char>(c));
                }
        }
    }
    return out;
}

bool is_simple_local_name(std::string_view s) {
    if (s.empty()) return false;
    auto first = static_cast<unsigned char>(s.front());
    if (!std::isalpha(first) && first != '_') return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_' || c == '-';
    });
}

bool is_integer_lexical(std::string_view s) {
    static const std::regex re("[+-]?[0-9]+");
    return std::regex_match(s.begin(), s.end(), re);
}

bool is_decimal_lexical(std::string_view s) {
    static const std::regex re("[+-]?[0-9]*\\.[0-9]+");
    return std::regex_match(s.begin(), s.end(), re);
}

class TurtleWriter {
public:
    explicit TurtleWriter(const PrefixMap& prefixes) : prefixes_(prefixes) {}

    std::string iri(std::string_view value) const {
        for (const auto& [name, ns] : prefixes_) {
            if (value.size() > ns.size() && value.starts_with(ns) &&
                is_simple_local_name(value.substr(ns.size()))) {
                return name + ":" + std::string(value.substr(ns.size()));
            }
        }
        return "<" + escape_iri(value) + ">";
    }

    std::string term(const Term& t) const {
        switch (t.kind) {
            case TermKind::iri: return iri(t.value);
            case TermKind::blank: return "_:" + t.value;
            case TermKind::literal: break;
        }
        if (t.datatype == vocab::kXsdInteger && is_integer_lexical(t.value)) return t.value;
        if (t.datatype == vocab::kXsdDecimal && is_decimal_lexical(t.value)) return t.value;
        std::string out = "\"" + escape_literal(t.value) + "\"";
        if (!t.language.empty()) return out + "@" + t.language;
        if (!t.datatype.empty()) return out + "^^" + iri(t.datatype);
        return out;
    }

private:
    const PrefixMap& prefixes_;
};

}  // namespace

std::string format_term_nt(const Term& t) {
    switch (t.kind) {
        case TermKind::iri: return "<" + escape_iri(t.value) + ">";
        case TermKind::blank: return "_:" + t.value;
        case TermKind::literal: break;
    }
    std::string out = "\"" + escape_literal(t.value) + "\"";
    if (!t.language.empty()) return out + "@" + t.language;
    if (!t.datatype.empty()) return out + "^^<" + escape_iri(t.datatype) + ">";
    return out;
}

std::size_t serialize_nquads(std::span<const Quad> quads, std::ostream& sink) {
    for (const auto& q : quads) {
        if (!q.graph || q.graph->is_default_graph()) {
            throw std::invalid_argument("quad missing graph: " + to_string(q));
        }
    }
    std::string line;
    for (const auto& q : quads) {
        line.clear();
        line += format_term_nt(q.subject);
        line += ' ';
        line += format_term_nt(q.predicate);
        line += ' ';
        line += format_term_nt(q.object);
        line += ' ';
        line += format_term_nt(*q.graph);
        line += " .\n";
        sink << line;
    }
    return quads.size();
}

void write_turtle_prefixes(const PrefixMap& prefixes, std::ostream& sink) {
    for (const auto& [name, ns] : prefixes) sink << "@prefix " << name << ": <" << escape_iri(ns) << "> .\n";
}

std::size_t write_turtle_blocks(std::span<const Quad> quads, const PrefixMap& prefixes, std::ostream& sink) {
    TurtleWriter writer(prefixes);

    // subject -> predicate -> objects, all in first-appearance order
    struct Block {
        Term subject;
        std::vector<std::pair<Term, std::vector<Term>>> predicates;
    };
    std::vector<Block> blocks;
    std::unordered_map<Term, std::size_t> block_of;
    for (const auto& q : quads) {
        auto [it, inserted] = block_of.try_emplace(q.subject, blocks.size());
        if (inserted) blocks.push_back({q.subject, {}});
        auto& preds = blocks[it->second].predicates;
        auto p = std::find_if(preds.begin(), preds.end(), [&](const auto& e) { return e.first == q.predicate; });
        if (p == preds.end()) {
            preds.push_back({q.predicate, {q.object}});
        } else {
            p->second.push_back(q.object);
        }
    }

    for (auto& block : blocks) {
        std::stable_sort(block.predicates.begin(), block.predicates.end(), [](const auto& a, const auto& b) {
            bool a_type = a.first.value == vocab::kRdfType;
            bool b_type = b.first.value == vocab::kRdfType;
            if (a_type != b_type) return a_type;
            return a.first.value < b.first.value;
        });
        sink << "\n" << writer.term(block.subject);
        for (std::size_t i = 0; i < block.predicates.size(); ++i) {
            const auto& [pred, objects] = block.predicates[i];
            sink << (i == 0 ? " " : " ;\n    ");
            sink << (pred.value == vocab::kRdfType ? std::string("a") : writer.term(pred));
            for (std::size_t j = 0; j < objects.size(); ++j) {
                sink << (j == 0 ? " " : " ,\n        ") << writer.term(objects[j]);
            }
        }
        sink << " .\n";
    }
    return quads.size();
}

std::size_t serialize_turtle(std::span<const Quad> quads, const PrefixMap& prefixes, std::ostream& sink) {
    write_turtle_prefixes(prefixes, sink);
    return write_turtle_blocks(quads, prefixes, sink);
}

}  // namespace varkg
