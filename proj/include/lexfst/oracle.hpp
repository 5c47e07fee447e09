#ifndef LEXFST_ORACLE_HPP
#define LEXFST_ORACLE_HPP

#include <functional>

#include "lexfst/eval.hpp"
#include "lexfst/fst.hpp"

namespace lexfst {

// Deliberately naive reference semantics by exhaustive path enumeration, so
// the pruned evaluator and the erasure constructions have something
// independent to be falsified against. Exponential in the input length;
// callers keep inputs short.

/// One accepting path together with its projections.
struct PathWitness {
    std::vector<LexTransition> transitions;
    Word weight;  // one symbol per step
    Word output;  // concatenated transition outputs

    friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

/// Every accepting path whose input projection is exactly c (paths have
/// length |c|: every transition consumes one input symbol).
std::vector<PathWitness> enumerate_accepting(const LexTransducer& m, const Word& c);

/// Exact per-output minima and global min over all witnesses; no pruning.
RunResult oracle_run(const LexTransducer& m, const Word& c);

/// All outputs of a two-tape automaton on input c by path enumeration.
/// Exact when no ε-input cycle emits output (ε-stretches are explored as
/// simple paths, which loses nothing because a removable ε-loop emits ε).
std::set<Word> oracle_two_tape_outputs(const TwoTapeAutomaton& n, const Word& c);

struct Divergence {
    bool equivalent = true;
    Word input;  // first diverging input in length-then-lex order

    explicit operator bool() const { return equivalent; }
};

/// Compares run against oracle_run (acceptance, selected set, min weight)
/// on every input of length <= max_len.
Divergence oracle_equivalence(const LexTransducer& m, size_t max_len);

/// Compares the relation of an erased automaton against the min-selected
/// outputs of the original on every input of length <= max_len.
Divergence oracle_erasure_equivalence(const LexTransducer& m, const TwoTapeAutomaton& n,
                                      size_t max_len);

/// Calls fn on every word over the alphabet size `symbols` of length
/// <= max_len, in length-then-lex order; stops early when fn returns false.
void for_each_word(size_t symbols, size_t max_len, const std::function<bool(const Word&)>& fn);

} // namespace lexfst

#endif
