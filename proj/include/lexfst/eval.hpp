#ifndef LEXFST_EVAL_HPP
#define LEXFST_EVAL_HPP

#include <map>
#include <optional>
#include <set>

#include "lexfst/fst.hpp"
#include "lexfst/weight_order.hpp"

namespace lexfst {

/// The branches of a nondeterministic run that currently occupy one state:
/// the minimal accumulated weight and every output word tied at it.
struct SuperpositionEntry {
    Word weight;
    std::set<Word> outputs;

    friend bool operator==(const SuperpositionEntry&, const SuperpositionEntry&) = default;
};

/// Per-state minimal entries after `consumed` input symbols. Keeping only
/// the per-state minimum is sound because appending a common weight symbol
/// preserves the suffix-dominant order, so a dominated branch can never
/// overtake the minimum later.
struct Superposition {
    std::map<StateId, SuperpositionEntry> entries;
    size_t consumed = 0;

    friend bool operator==(const Superposition&, const Superposition&) = default;
};

/// Canonicalizing insert: keeps the cmp_weights-minimum per state and unions
/// outputs on exact ties.
void merge_entry(Superposition& s, StateId q, Word weight, std::set<Word> outputs);

/// One entry (q, ε, {ε}) per initial state.
Superposition initial_superposition(const LexTransducer& m);

/// Advances every entry over every matching transition, then re-canonicalizes.
Superposition step_superposition(const LexTransducer& m, const Superposition& s, SymbolId sigma);

struct RunResult {
    bool accepted = false;
    std::map<Word, Word> quotient;   // output word -> minimal weight word
    std::set<Word> selected;         // outputs achieving min_weight
    std::optional<Word> min_weight;  // absent iff rejected

    friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Pruned evaluation of input c. selected/min_weight are exact; quotient
/// contains only the outputs that survived per-state pruning (see QuotientMode).
RunResult run(const LexTransducer& m, const Word& c);

/// Pruned: read the quotient off the pruned run — fast, but a dominated
/// output may be missing even though some accepting path produces it.
/// Exact: per-output minima over all accepting paths, via the path oracle.
enum class QuotientMode { Pruned, Exact };

std::map<Word, Word> quotient(const LexTransducer& m, const Word& c, QuotientMode mode);

} // namespace lexfst

#endif
