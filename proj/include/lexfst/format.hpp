#ifndef LEXFST_FORMAT_HPP
#define LEXFST_FORMAT_HPP

#include <stdexcept>
#include <string>

#include "lexfst/fst.hpp"
#include "lexfst/prob.hpp"

namespace lexfst {

/// Any defect in a text document: syntax, undeclared names, duplicates.
/// line/col are 1-based positions of the offending token.
struct ParseError : std::runtime_error {
    size_t line;
    size_t col;
    ParseError(size_t line, size_t col, const std::string& msg);
};

// Three line-oriented formats, all UTF-8 with '#' comments:
//   lexfst v1 — weighted transducers (W:, Sigma:, Gamma:, Q:, I:, F:, T:)
//   fst2  v1  — unweighted two-tape automata (no W:, transitions may have
//               '-' = epsilon input)
//   pfsa  v1  — probabilistic acceptors (cuts:/N:, Gamma:, optional Delta:,
//               Q:, I:, F:, T: with a 1-based interval index)
// Sections may appear in any order and repeat (contents accumulate);
// serialization emits one canonical order so round-trips are stable.

LexTransducer parse_lexfst(const std::string& text);
std::string serialize_lexfst(const LexTransducer& m);

TwoTapeAutomaton parse_fst2(const std::string& text);
std::string serialize_fst2(const TwoTapeAutomaton& m);

ProbAutomaton parse_pfsa(const std::string& text);
std::string serialize_pfsa(const ProbAutomaton& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace lexfst

#endif
