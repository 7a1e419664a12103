#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vkg/store.hpp"
#include "vkg/term.hpp"

namespace vkg {

// A triple at the term level, before dictionary encoding.
struct TermTriple {
    Term subject;
    Term predicate;
    Term object;

    bool operator==(const TermTriple&) const = default;
};

struct ParseDiagnostic {
    std::size_t line = 0;    // 1-based
    std::size_t column = 0;  // 1-based
    std::string message;
    std::string offending_text;

    std::string to_string() const;
};

// Thrown in strict mode on the first diagnostic.
struct ParseError : Error {
    explicit ParseError(ParseDiagnostic d) : Error(d.to_string()), diagnostic(std::move(d)) {}
    ParseDiagnostic diagnostic;
};

enum class ParseMode { Strict, Lenient };

struct ParsedDocument {
    std::vector<TermTriple> triples;
    std::vector<ParseDiagnostic> diagnostics;
};

// Line-based N-Triples parser. One triple per valid non-comment line;
// decodes ECHAR and \uXXXX / \UXXXXXXXX escapes. In lenient mode bad lines
// are skipped and reported; in strict mode the first diagnostic throws.
ParsedDocument parse_ntriples(std::string_view text, ParseMode mode = ParseMode::Strict);

// Single term in N-Triples syntax with minimal escaping. The building
// block for document serialization, TSV results, and canonical row order.
std::string term_to_ntriples(const Term& term);

// Canonical document: one line per triple, sorted by the (S,P,O) term
// serializations, duplicates removed. Byte-deterministic for a given set.
std::string serialize_ntriples(const std::vector<TermTriple>& triples);

// Canonical dump of everything in a snapshot.
std::string serialize_snapshot(const Snapshot& snapshot);

struct LoadReport {
    std::size_t parsed = 0;
    std::size_t inserted = 0;
    std::size_t skipped = 0;  // duplicates plus (lenient) bad lines
    std::vector<ParseDiagnostic> diagnostics;
};

// parse + intern + insert.
LoadReport load_ntriples(TripleStore& store, std::string_view text,
                         ParseMode mode = ParseMode::Strict);
LoadReport load_ntriples_file(TripleStore& store, const std::string& path,
                              ParseMode mode = ParseMode::Strict);

std::string read_file(const std::string& path);  // throws LoadError
void write_file(const std::string& path, std::string_view content);

}  // namespace vkg
