#include "vkg/term.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace vkg {

Term Term::decimal(double v) {
    char buf[64];
    if (v == static_cast<long long>(v) && std::fabs(v) < 1e15) {
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
        return typed_literal(buf, xsd::Decimal);
    }
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return typed_literal(std::string(buf, end), xsd::Decimal);
}

bool is_absolute_iri(std::string_view value) {
    if (value.empty()) return false;
    // scheme = ALPHA *( ALPHA / DIGIT / "+" / "-" / "." ) ":"
    if (!std::isalpha(static_cast<unsigned char>(value[0]))) return false;
    std::size_t colon = std::string_view::npos;
    for (std::size_t i = 1; i < value.size(); ++i) {
        char c = value[i];
        if (c == ':') {
            colon = i;
            break;
        }
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
            return false;
    }
    if (colon == std::string_view::npos) return false;
    // Characters the N-Triples IRIREF production forbids.
    for (unsigned char c : value) {
        if (c <= 0x20) return false;
        switch (c) {
            case '<':
            case '>':
            case '"':
            case '{':
            case '}':
            case '|':
            case '^':
            case '`':
            case '\\':
                return false;
            default:
                break;
        }
    }
    return true;
}

bool is_valid_language_tag(std::string_view tag) {
    // LANGTAG: [a-zA-Z]+ ('-' [a-zA-Z0-9]+)*
    if (tag.empty()) return false;
    std::size_t i = 0;
    while (i < tag.size() && std::isalpha(static_cast<unsigned char>(tag[i]))) ++i;
    if (i == 0) return false;
    while (i < tag.size()) {
        if (tag[i] != '-') return false;
        ++i;
        std::size_t start = i;
        while (i < tag.size() && std::isalnum(static_cast<unsigned char>(tag[i]))) ++i;
        if (i == start) return false;
    }
    return true;
}

void validate_term(const Term& term) {
    switch (term.kind) {
        case TermKind::Iri:
            if (!is_absolute_iri(term.lexical))
                throw ValidationError("iri: not an absolute IRI: '" + term.lexical + "'");
            break;
        case TermKind::BlankNode:
            if (term.lexical.empty())
                throw ValidationError("blank node: empty label");
            for (unsigned char c : term.lexical)
                if (c <= 0x20)
                    throw ValidationError("blank node: whitespace in label '" + term.lexical + "'");
            break;
        case TermKind::Literal:
            if (term.datatype.empty())
                throw ValidationError("literal: missing datatype for '" + term.lexical + "'");
            if (!is_absolute_iri(term.datatype))
                throw ValidationError("literal: datatype is not an absolute IRI: '" +
                                      term.datatype + "'");
            if (!term.lang.empty()) {
                if (!is_valid_language_tag(term.lang))
                    throw ValidationError("literal: illegal language tag '" + term.lang + "'");
                if (term.datatype != rdf::LangString)
                    throw ValidationError(
                        "literal: language tag requires datatype rdf:langString, got '" +
                        term.datatype + "'");
            } else if (term.datatype == rdf::LangString) {
                throw ValidationError("literal: rdf:langString requires a language tag");
            }
            break;
    }
}

}  // namespace vkg
