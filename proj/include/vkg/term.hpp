#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vkg {

// Dense dictionary id. Assigned in first-intern order, stable for the
// lifetime of the owning store.
using TermId = std::uint32_t;

enum class TermKind : std::uint8_t { Iri, BlankNode, Literal };

// Well-known datatype and predicate IRIs.
namespace xsd {
inline constexpr std::string_view String = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view Integer = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view Decimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view Double = "http://www.w3.org/2001/XMLSchema#double";
inline constexpr std::string_view Boolean = "http://www.w3.org/2001/XMLSchema#boolean";
}  // namespace xsd

namespace rdf {
inline constexpr std::string_view Type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view LangString = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
}  // namespace rdf

namespace rdfs {
inline constexpr std::string_view SubClassOf = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
}  // namespace rdfs

// An RDF term: IRI, blank node, or literal. `lexical` holds the IRI string,
// the blank node label, or the literal's lexical form depending on kind.
// Literals always carry a datatype; a non-empty language tag implies
// rdf:langString.
struct Term {
    TermKind kind = TermKind::Iri;
    std::string lexical;
    std::string datatype;  // literals only
    std::string lang;      // literals only

    static Term iri(std::string value) {
        return Term{TermKind::Iri, std::move(value), {}, {}};
    }
    static Term blank(std::string label) {
        return Term{TermKind::BlankNode, std::move(label), {}, {}};
    }
    // Plain literal, defaults to xsd:string.
    static Term literal(std::string lexical) {
        return Term{TermKind::Literal, std::move(lexical), std::string(xsd::String), {}};
    }
    static Term typed_literal(std::string lexical, std::string_view datatype) {
        return Term{TermKind::Literal, std::move(lexical), std::string(datatype), {}};
    }
    static Term lang_literal(std::string lexical, std::string language) {
        return Term{TermKind::Literal, std::move(lexical), std::string(rdf::LangString),
                    std::move(language)};
    }
    static Term integer(long long v) { return typed_literal(std::to_string(v), xsd::Integer); }
    static Term decimal(double v);  // shortest round-trip lexical form
    static Term boolean(bool v) { return typed_literal(v ? "true" : "false", xsd::Boolean); }

    bool is_iri() const { return kind == TermKind::Iri; }
    bool is_blank() const { return kind == TermKind::BlankNode; }
    bool is_literal() const { return kind == TermKind::Literal; }

    bool operator==(const Term& other) const = default;
};

struct TermHash {
    std::size_t operator()(const Term& t) const {
        std::size_t h = std::hash<std::string>{}(t.lexical);
        h ^= std::hash<std::string>{}(t.datatype) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= std::hash<std::string>{}(t.lang) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h ^ (static_cast<std::size_t>(t.kind) << 1);
    }
};

struct Triple {
    TermId subject = 0;
    TermId predicate = 0;
    TermId object = 0;

    auto operator<=>(const Triple&) const = default;
};

struct TripleHash {
    std::size_t operator()(const Triple& t) const {
        std::uint64_t k = (static_cast<std::uint64_t>(t.subject) << 32) ^
                          (static_cast<std::uint64_t>(t.predicate) << 16) ^ t.object;
        k ^= k >> 33;
        k *= 0xff51afd7ed558ccdULL;
        k ^= k >> 33;
        return static_cast<std::size_t>(k);
    }
};

// Lookup key for index scans: each position is a bound id or a wildcard.
struct TriplePattern {
    std::optional<TermId> subject;
    std::optional<TermId> predicate;
    std::optional<TermId> object;

    bool matches(const Triple& t) const {
        return (!subject || *subject == t.subject) &&
               (!predicate || *predicate == t.predicate) &&
               (!object || *object == t.object);
    }
};

// Error hierarchy. Validation errors cover malformed terms and ill-typed
// triples; internal errors indicate a broken store invariant (unknown ids).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct InternalError : Error {
    using Error::Error;
};
struct LoadError : Error {
    using Error::Error;
};

// Checks for a scheme followed by ':' per RFC 3986, plus absence of
// characters that would break N-Triples serialization.
bool is_absolute_iri(std::string_view value);
bool is_valid_language_tag(std::string_view tag);

// Throws ValidationError naming the offending field if the term violates
// its invariants.
void validate_term(const Term& term);

}  // namespace vkg
