#include "vkg/ntriples.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace vkg {

std::string ParseDiagnostic::to_string() const {
    std::ostringstream os;
    os << "line " << line << ", column " << column << ": " << message;
    if (!offending_text.empty()) os << " near '" << offending_text << "'";
    return os.str();
}

namespace {

// Thrown internally while scanning one line; converted to a diagnostic.
struct LineFault {
    std::size_t column;  // 1-based
    std::string message;
    std::string offending;
};

class LineScanner {
public:
    LineScanner(std::string_view line) : line_(line) {}

    bool at_end() const { return pos_ >= line_.size(); }
    char peek() const { return line_[pos_]; }
    std::size_t column() const { return pos_ + 1; }

    void skip_ws() {
        while (!at_end() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
    }

    [[noreturn]] void fail(std::size_t col, std::string message, std::size_t tok_start) const {
        std::size_t end = std::min(line_.size(), tok_start - 1 + 24);
        throw LineFault{col, std::move(message),
                        std::string(line_.substr(tok_start - 1, end - (tok_start - 1)))};
    }

    // <IRIREF> with \uXXXX / \UXXXXXXXX escapes.
    Term parse_iri() {
        std::size_t start = column();
        ++pos_;  // consume '<'
        std::string value;
        while (true) {
            if (at_end()) fail(column(), "unterminated IRI", start);
            char c = line_[pos_];
            if (c == '>') {
                ++pos_;
                break;
            }
            if (c == '\\') {
                value += parse_uchar(start);
                continue;
            }
            unsigned char uc = static_cast<unsigned char>(c);
            if (uc <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' ||
                c == '^' || c == '`')
                fail(column(), std::string("illegal IRI character '") + c + "'", start);
            value.push_back(c);
            ++pos_;
        }
        if (!is_absolute_iri(value)) fail(start, "not an absolute IRI", start);
        return Term::iri(std::move(value));
    }

    Term parse_blank() {
        std::size_t start = column();
        pos_ += 2;  // consume '_:'
        std::string label;
        while (!at_end()) {
            char c = line_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
                c == '.') {
                label.push_back(c);
                ++pos_;
            } else {
                break;
            }
        }
        if (label.empty()) fail(start, "empty blank node label", start);
        if (label.back() == '.') {  // trailing dot belongs to the statement
            label.pop_back();
            --pos_;
            if (label.empty()) fail(start, "empty blank node label", start);
        }
        return Term::blank(std::move(label));
    }

    Term parse_literal() {
        std::size_t start = column();
        ++pos_;  // consume '"'
        std::string lex;
        while (true) {
            if (at_end()) fail(column(), "unterminated literal", start);
            char c = line_[pos_];
            if (c == '"') {
                ++pos_;
                break;
            }
            if (c == '\\') {
                lex += parse_escape(start);
                continue;
            }
            lex.push_back(c);
            ++pos_;
        }
        if (!at_end() && peek() == '@') {
            std::size_t tag_start = column();
            ++pos_;
            std::string tag;
            while (!at_end() &&
                   (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) {
                tag.push_back(peek());
                ++pos_;
            }
            if (!is_valid_language_tag(tag)) fail(tag_start, "illegal language tag", tag_start);
            return Term::lang_literal(std::move(lex), std::move(tag));
        }
        if (!at_end() && peek() == '^') {
            std::size_t caret = column();
            if (pos_ + 1 >= line_.size() || line_[pos_ + 1] != '^')
                fail(caret, "expected '^^' before datatype IRI", caret);
            pos_ += 2;
            if (at_end() || peek() != '<') fail(column(), "expected datatype IRI", caret);
            Term dt = parse_iri();
            if (dt.lexical == rdf::LangString)
                fail(start, "rdf:langString literal requires a language tag", start);
            return Term::typed_literal(std::move(lex), dt.lexical);
        }
        return Term::literal(std::move(lex));
    }

    void expect_dot() {
        skip_ws();
        if (at_end() || peek() != '.')
            fail(column(), "expected '.' terminating the triple", column());
        ++pos_;
        skip_ws();
        if (!at_end() && peek() != '#')
            fail(column(), "unexpected trailing content after '.'", column());
    }

private:
    // ECHAR or UCHAR inside a literal; cursor sits on '\'.
    std::string parse_escape(std::size_t tok_start) {
        std::size_t esc_col = column();
        ++pos_;
        if (at_end()) fail(esc_col, "dangling escape at end of line", tok_start);
        char c = line_[pos_];
        ++pos_;
        switch (c) {
            case 't': return "\t";
            case 'b': return "\b";
            case 'n': return "\n";
            case 'r': return "\r";
            case 'f': return "\f";
            case '"': return "\"";
            case '\'': return "'";
            case '\\': return "\\";
            case 'u': return decode_codepoint(4, esc_col, tok_start);
            case 'U': return decode_codepoint(8, esc_col, tok_start);
            default:
                fail(esc_col, std::string("unknown escape '\\") + c + "'", tok_start);
        }
    }

    std::string parse_uchar(std::size_t tok_start) {
        std::size_t esc_col = column();
        ++pos_;
        if (at_end() || (peek() != 'u' && peek() != 'U'))
            fail(esc_col, "only \\u/\\U escapes are allowed in IRIs", tok_start);
        char kind = peek();
        ++pos_;
        return decode_codepoint(kind == 'u' ? 4 : 8, esc_col, tok_start);
    }

    std::string decode_codepoint(int digits, std::size_t esc_col, std::size_t tok_start) {
        std::uint32_t cp = 0;
        for (int i = 0; i < digits; ++i) {
            if (at_end()) fail(esc_col, "truncated \\u escape", tok_start);
            char h = line_[pos_];
            std::uint32_t v;
            if (h >= '0' && h <= '9') v = static_cast<std::uint32_t>(h - '0');
            else if (h >= 'a' && h <= 'f') v = static_cast<std::uint32_t>(h - 'a' + 10);
            else if (h >= 'A' && h <= 'F') v = static_cast<std::uint32_t>(h - 'A' + 10);
            else fail(column(), "invalid hex digit in \\u escape", tok_start);
            cp = (cp << 4) | v;
            ++pos_;
        }
        if (cp >= 0xD800 && cp <= 0xDFFF)
            fail(esc_col, "surrogate code point in \\u escape", tok_start);
        if (cp > 0x10FFFF) fail(esc_col, "code point out of range", tok_start);
        return encode_utf8(cp);
    }

    static std::string encode_utf8(std::uint32_t cp) {
        std::string out;
        if (cp <= 0x7F) {
            out.push_back(static_cast<char>(cp));
        } else if (cp <= 0x7FF) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp <= 0xFFFF) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
        return out;
    }

    std::string_view line_;
    std::size_t pos_ = 0;
};

bool parse_line(std::string_view line, TermTriple& out, LineFault& fault) {
    LineScanner sc(line);
    try {
        sc.skip_ws();
        if (sc.at_end() || sc.peek() == '#') return false;  // blank or comment line
        if (sc.peek() == '<') out.subject = sc.parse_iri();
        else if (sc.peek() == '_') out.subject = sc.parse_blank();
        else sc.fail(sc.column(), "expected IRI or blank node as subject", sc.column());
        sc.skip_ws();
        if (sc.at_end() || sc.peek() != '<')
            sc.fail(sc.column(), "expected IRI as predicate", sc.column());
        out.predicate = sc.parse_iri();
        sc.skip_ws();
        if (sc.at_end()) sc.fail(sc.column(), "expected object term", sc.column());
        if (sc.peek() == '<') out.object = sc.parse_iri();
        else if (sc.peek() == '_') out.object = sc.parse_blank();
        else if (sc.peek() == '"') out.object = sc.parse_literal();
        else sc.fail(sc.column(), "expected IRI, blank node, or literal as object", sc.column());
        sc.expect_dot();
        return true;
    } catch (LineFault& f) {
        fault = std::move(f);
        fault.column = std::min(fault.column, line.size() + 1);
        throw;
    }
}

void escape_literal_into(std::string& out, std::string_view lex) {
    for (char c : lex) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(c);
        }
    }
}

}  // namespace

ParsedDocument parse_ntriples(std::string_view text, ParseMode mode) {
    ParsedDocument doc;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        if (pos == text.size() && line_no > 0) break;
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;
        TermTriple t;
        LineFault fault;
        try {
            if (parse_line(line, t, fault)) doc.triples.push_back(std::move(t));
        } catch (const LineFault&) {
            ParseDiagnostic d{line_no, fault.column, fault.message, fault.offending};
            if (mode == ParseMode::Strict) throw ParseError(std::move(d));
            doc.diagnostics.push_back(std::move(d));
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return doc;
}

std::string term_to_ntriples(const Term& term) {
    std::string out;
    switch (term.kind) {
        case TermKind::Iri:
            out += '<';
            out += term.lexical;
            out += '>';
            break;
        case TermKind::BlankNode:
            out += "_:";
            out += term.lexical;
            break;
        case TermKind::Literal:
            out += '"';
            escape_literal_into(out, term.lexical);
            out += '"';
            if (!term.lang.empty()) {
                out += '@';
                out += term.lang;
            } else if (term.datatype != xsd::String) {
                out += "^^<";
                out += term.datatype;
                out += '>';
            }
            break;
    }
    return out;
}

std::string serialize_ntriples(const std::vector<TermTriple>& triples) {
    std::vector<std::array<std::string, 3>> rows;
    rows.reserve(triples.size());
    for (const auto& t : rows.empty() ? triples : triples) {
        rows.push_back({term_to_ntriples(t.subject), term_to_ntriples(t.predicate),
                        term_to_ntriples(t.object)});
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::string out;
    for (const auto& r : rows) {
        out += r[0];
        out += ' ';
        out += r[1];
        out += ' ';
        out += r[2];
        out += " .\n";
    }
    return out;
}

std::string serialize_snapshot(const Snapshot& snapshot) {
    std::vector<TermTriple> triples;
    triples.reserve(snapshot.triple_count());
    for (const Triple& t : snapshot.all()) {
        triples.push_back({snapshot.resolve(t.subject), snapshot.resolve(t.predicate),
                           snapshot.resolve(t.object)});
    }
    return serialize_ntriples(triples);
}

LoadReport load_ntriples(TripleStore& store, std::string_view text, ParseMode mode) {
    ParsedDocument doc = parse_ntriples(text, mode);
    LoadReport report;
    report.parsed = doc.triples.size();
    report.skipped = doc.diagnostics.size();
    report.diagnostics = std::move(doc.diagnostics);
    for (const auto& t : doc.triples) {
        Triple triple{store.intern(t.subject), store.intern(t.predicate),
                      store.intern(t.object)};
        if (store.insert(triple)) ++report.inserted;
        else ++report.skipped;
    }
    return report;
}

LoadReport load_ntriples_file(TripleStore& store, const std::string& path, ParseMode mode) {
    return load_ntriples(store, read_file(path), mode);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw LoadError("cannot write file: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw LoadError("write failed: " + path);
}

}  // namespace vkg
