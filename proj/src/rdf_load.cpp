#include "varkg/rdf_load.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <sstream>

#include "varkg/error.hpp"
#include "varkg/parse_common.hpp"
#include "varkg/text_input.hpp"
#include "varkg/vocabulary.hpp"

namespace varkg {

namespace {

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

/** Character cursor shared by the N-Quads and Turtle readers. */
class Cursor {
public:
    explicit Cursor(std::string_view text, std::size_t first_line = 1) : text_(text), line_(first_line) {}

    bool eof() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    char get() {
        char c = text_[pos_++];
        if (c == '\n') ++line_;
        return c;
    }
    std::size_t line() const { return line_; }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, message); }

    void skip_ws(bool comments) {
        while (!eof()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                get();
            } else if (comments && c == '#') {
                while (!eof() && peek() != '\n') get();
            } else {
                break;
            }
        }
    }

    void expect(char c) {
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }

    bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }
    void advance(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) get();
    }

    std::uint32_t hex(int digits) {
        std::uint32_t v = 0;
        for (int i = 0; i < digits; ++i) {
            if (eof() || !std::isxdigit(static_cast<unsigned char>(peek()))) fail("bad \\u escape");
            char c = get();
            v = v * 16 + static_cast<std::uint32_t>(std::isdigit(static_cast<unsigned char>(c))
                                                        ? c - '0'
                                                        : std::tolower(static_cast<unsigned char>(c)) - 'a' + 10);
        }
        return v;
    }

    std::string iriref() {
        expect('<');
        std::string out;
        while (true) {
            if (eof()) fail("unterminated IRI");
            char c = get();
            if (c == '>') return out;
            if (c == '\\') {
                char e = eof() ? '\0' : get();
                if (e == 'u') {
                    append_utf8(out, hex(4));
                } else if (e == 'U') {
                    append_utf8(out, hex(8));
                } else {
                    fail("bad escape in IRI");
                }
            } else if (c == '\n') {
                fail("newline in IRI");
            } else {
                out.push_back(c);
            }
        }
    }

    std::string quoted() {
        char quote = get();
        std::string out;
        while (true) {
            if (eof()) fail("unterminated string");
            char c = get();
            if (c == quote) return out;
            if (c == '\n') fail("newline in string literal");
            if (c != '\\') {
                out.push_back(c);
                continue;
            }
            if (eof()) fail("unterminated escape");
            char e = get();
            switch (e) {
                case 't': out.push_back('\t'); break;
                case 'n': out.push_back('\n'); break;
                case 'r': out.push_back('\r'); break;
                case 'b': out.push_back('\b'); break;
                case 'f': out.push_back('\f'); break;
                case '"': out.push_back('"'); break;
                case '\'': out.push_back('\''); break;
                case '\\': out.push_back('\\'); break;
                case 'u': append_utf8(out, hex(4)); break;
                case 'U': append_utf8(out, hex(8)); break;
                default: fail(std::string("bad escape \\") + e);
            }
        }
    }

    std::string name_chars(bool allow_colon) {
        std::string out;
        while (!eof()) {
            char c = peek();
            bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
                      (allow_colon && c == ':') || static_cast<unsigned char>(c) >= 0x80;
            if (!ok) break;
            // a trailing '.' ends the statement rather than the name
            if (c == '.') {
                char n = peek(1);
                bool continues = std::isalnum(static_cast<unsigned char>(n)) || n == '_' || n == '-' ||
                                 n == ':' || static_cast<unsigned char>(n) >= 0x80;
                if (!continues) break;
            }
            out.push_back(get());
        }
        return out;
    }

    std::string blank_label() {
        advance(2);  // "_:"
        std::string label = name_chars(false);
        if (label.empty()) fail("empty blank node label");
        return label;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_;
};

Term literal_suffix(Cursor& c, std::string lexical, const std::function<std::string()>& datatype_iri) {
    if (!c.eof() && c.peek() == '@') {
        c.get();
        std::string lang;
        while (!c.eof() && (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '-')) {
            lang.push_back(c.get());
        }
        if (lang.empty()) c.fail("empty language tag");
        return Term::lang_literal(std::move(lexical), std::move(lang));
    }
    if (c.starts_with("^^")) {
        c.advance(2);
        return Term::literal(std::move(lexical), datatype_iri());
    }
    return Term::literal(std::move(lexical));
}

Term nq_term(Cursor& c) {
    if (c.eof()) c.fail("unexpected end of line");
    char ch = c.peek();
    if (ch == '<') return Term::iri(c.iriref());
    if (ch == '_' && c.peek(1) == ':') return Term::blank(c.blank_label());
    if (ch == '"') {
        std::string lex = c.quoted();
        return literal_suffix(c, std::move(lex), [&c] { return c.iriref(); });
    }
    c.fail(std::string("unexpected character '") + ch + "'");
}

class TurtleParser {
public:
    explicit TurtleParser(std::string_view text) : c_(text) {}

    std::vector<Quad> run() {
        while (true) {
            c_.skip_ws(true);
            if (c_.eof()) return std::move(out_);
            if (c_.starts_with("@prefix")) {
                c_.advance(7);
                prefix_directive(true);
            } else if (c_.starts_with("@base")) {
                c_.advance(5);
                c_.skip_ws(true);
                base_ = c_.iriref();
                c_.skip_ws(true);
                c_.expect('.');
            } else if (keyword("PREFIX")) {
                prefix_directive(false);
            } else {
                triples();
            }
        }
    }

private:
    bool keyword(std::string_view kw) {
        if (!c_.starts_with(kw)) return false;
        char after = c_.peek(kw.size());
        if (after != ' ' && after != '\t') return false;
        c_.advance(kw.size());
        return true;
    }

    void prefix_directive(bool dotted) {
        c_.skip_ws(true);
        std::string name = c_.name_chars(false);
        c_.expect(':');
        c_.skip_ws(true);
        prefixes_[name] = resolve(c_.iriref());
        if (dotted) {
            c_.skip_ws(true);
            c_.expect('.');
        }
    }

    std::string resolve(std::string iri) const {
        if (base_.empty() || iri.find(':') != std::string::npos) return iri;
        return base_ + iri;
    }

    std::string iri() {
        c_.skip_ws(true);
        if (c_.peek() == '<') return resolve(c_.iriref());
        std::string prefix = c_.name_chars(false);
        if (c_.eof() || c_.peek() != ':') c_.fail("expected IRI or prefixed name");
        c_.get();
        auto it = prefixes_.find(prefix);
        if (it == prefixes_.end()) c_.fail("undeclared prefix '" + prefix + "'");
        return it->second + c_.name_chars(true);
    }

    Term subject() {
        c_.skip_ws(true);
        if (c_.peek() == '_' && c_.peek(1) == ':') return Term::blank(c_.blank_label());
        if (c_.peek() == '[' || c_.peek() == '(') c_.fail("blank node property lists and collections are not supported");
        return Term::iri(iri());
    }

    Term verb() {
        c_.skip_ws(true);
        if (c_.peek() == 'a') {
            char n = c_.peek(1);
            if (n == ' ' || n == '\t' || n == '\n' || n == '\r' || n == '<' || n == '"') {
                c_.get();
                return Term::iri(std::string(vocab::kRdfType));
            }
        }
        return Term::iri(iri());
    }

    Term object() {
        c_.skip_ws(true);
        char ch = c_.peek();
        if (ch == '"' || ch == '\'') {
            if (c_.starts_with("\"\"\"") || c_.starts_with("'''")) c_.fail("long string literals are not supported");
            std::string lex = c_.quoted();
            return literal_suffix(c_, std::move(lex), [this] { return iri(); });
        }
        if (ch == '_' && c_.peek(1) == ':') return Term::blank(c_.blank_label());
        if (ch == '[' || ch == '(') c_.fail("blank node property lists and collections are not supported");
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '+' || ch == '-' || ch == '.') return number();
        if (c_.starts_with("true") || c_.starts_with("false")) {
            std::string word = c_.name_chars(false);
            if (word == "true" || word == "false") return Term::literal(word, std::string(vocab::kXsdBoolean));
            c_.fail("unexpected token '" + word + "'");
        }
        return Term::iri(iri());
    }

    Term number() {
        std::string lex;
        auto digits = [&] {
            while (!c_.eof() && std::isdigit(static_cast<unsigned char>(c_.peek()))) lex.push_back(c_.get());
        };
        if (c_.peek() == '+' || c_.peek() == '-') lex.push_back(c_.get());
        digits();
        bool decimal = false, exponent = false;
        if (c_.peek() == '.' && std::isdigit(static_cast<unsigned char>(c_.peek(1)))) {
            decimal = true;
            lex.push_back(c_.get());
            digits();
        }
        if (c_.peek() == 'e' || c_.peek() == 'E') {
            exponent = true;
            lex.push_back(c_.get());
            if (c_.peek() == '+' || c_.peek() == '-') lex.push_back(c_.get());
            digits();
        }
        if (lex.empty() || lex == "+" || lex == "-") c_.fail("malformed number");
        std::string_view dt = exponent ? vocab::kXsdDouble : decimal ? vocab::kXsdDecimal : vocab::kXsdInteger;
        return Term::literal(std::move(lex), std::string(dt));
    }

    void triples() {
        Term s = subject();
        while (true) {
            Term p = verb();
            while (true) {
                out_.push_back({s, p, object(), std::nullopt});
                c_.skip_ws(true);
                if (c_.peek() != ',') break;
                c_.get();
            }
            c_.skip_ws(true);
            if (c_.peek() == ';') {
                while (c_.peek() == ';') {
                    c_.get();
                    c_.skip_ws(true);
                }
                if (c_.peek() == '.') break;
                continue;
            }
            break;
        }
        c_.skip_ws(true);
        c_.expect('.');
    }

    Cursor c_;
    std::map<std::string, std::string> prefixes_;
    std::string base_;
    std::vector<Quad> out_;
};

}  // namespace

std::vector<Quad> parse_nquads(std::istream& in) {
    std::vector<Quad> out;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        Cursor c(line, line_number);
        c.skip_ws(true);
        if (c.eof()) continue;
        Quad q;
        q.subject = nq_term(c);
        c.skip_ws(false);
        q.predicate = nq_term(c);
        if (!q.predicate.is_iri()) c.fail("predicate must be an IRI");
        c.skip_ws(false);
        q.object = nq_term(c);
        c.skip_ws(false);
        if (!c.eof() && c.peek() != '.') {
            q.graph = nq_term(c);
            if (q.graph->is_literal()) c.fail("graph label cannot be a literal");
            c.skip_ws(false);
        }
        c.expect('.');
        c.skip_ws(true);
        if (!c.eof()) c.fail("trailing characters after '.'");
        out.push_back(std::move(q));
    }
    return out;
}

std::vector<Quad> parse_turtle(std::string_view text) { return TurtleParser(text).run(); }

std::vector<Quad> parse_turtle(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_turtle(buf.str());
}

std::vector<Quad> load_rdf_file(const std::filesystem::path& path) {
    auto name = path.filename().string();
    if (name.ends_with(".gz")) name.resize(name.size() - 3);
    auto in = open_text_input(path);
    try {
        if (name.ends_with(".nq") || name.ends_with(".nt")) return parse_nquads(*in);
        if (name.ends_with(".ttl")) return parse_turtle(*in);
    } catch (const ParseError& e) {
        throw ParseError(0, path.string() + ": " + e.what());
    }
    throw InputError("unrecognized RDF file extension: " + path.string());
}

}  // namespace varkg
