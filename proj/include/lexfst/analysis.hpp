#ifndef LEXFST_ANALYSIS_HPP
#define LEXFST_ANALYSIS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lexfst/fst.hpp"

namespace lexfst {

/// Syntactic classification with respect to the input tape.
struct ClassReport {
    bool sequential_up_to_input = false;     // every transition reads <= 1 input symbol
    bool epsilon_free_up_to_input = false;   // every transition reads exactly 1
    bool deterministic_up_to_input = false;  // sequential + single initial + per (q,σ) <= 1
    bool single_initial = false;

    friend bool operator==(const ClassReport&, const ClassReport&) = default;
};

ClassReport classify(const TwoTapeAutomaton& n);
ClassReport classify(const LexTransducer& m);

/// All outputs d with (c,d) in the relation, by configuration stepping with
/// ε-closure interleaved. Throws when a trimmed ε-cycle emits output (the
/// output set could then be infinite).
std::set<Word> eval_two_tape(const TwoTapeAutomaton& n, const Word& c);

/// An elementary all-ε-input cycle whose concatenated output is nonempty;
/// any machine without one has a finite output set for every input.
struct EpsCycle {
    std::vector<TwoTapeTransition> transitions;
    Word output;
};

std::vector<EpsCycle> detect_eps_cycles(const TwoTapeAutomaton& n);

/// Two distinct transitions into one target over one input symbol. The pair
/// of sources (possibly the same state twice, for parallel transitions) is
/// what erasure has to arbitrate by weight.
struct Conflict {
    StateId q1;
    StateId q2;
    SymbolId input;
    StateId target;
    SymbolId w1;
    SymbolId w2;
    bool equal_weights = false;
    bool co_reachable = false;  // (q1,q2) reachable in the input-synchronized square

    friend bool operator==(const Conflict&, const Conflict&) = default;
};

struct ConflictReport {
    std::vector<Conflict> pairs;
};

ConflictReport find_conflicts(const LexTransducer& m);

/// Single final state and no co-reachable equal-weight conflict; such
/// machines are functional and admit the direct pair erasure.
struct StrongFunctionalReport {
    bool holds = false;
    std::optional<Conflict> conflict;  // an offending equal-weight conflict
    std::vector<StateId> finals;       // filled when |F| != 1
    std::string reason;                // human-readable witness description
};

StrongFunctionalReport check_strongly_functional(const LexTransducer& m);

/// Verdict of a functionality test plus a confirmed counterexample input
/// (an input with at least two distinct outputs) when it fails.
struct FunctionalReport {
    bool functional = false;
    std::optional<Word> counterexample;
};

/// Decides functionality of the relation of a two-tape automaton via the
/// input-synchronized square with output-delay tracking. The machine is
/// trimmed internally; input-ε transitions are rejected.
FunctionalReport check_functional_unweighted(const TwoTapeAutomaton& n);

/// Functionality of the min-selected relation of a weighted transducer:
/// erase weights generally, then test the unweighted result.
FunctionalReport check_functional(const LexTransducer& m);

/// Complete deterministic automaton; state 0.. with explicit transition
/// table. May contain a dead state (the empty subset).
struct Dfa {
    size_t num_symbols = 0;
    size_t num_states = 0;
    StateId start = 0;
    std::vector<char> accepting;
    std::vector<StateId> next;  // num_states * num_symbols, row-major

    StateId step(StateId q, SymbolId a) const { return next[q * num_symbols + a]; }
    bool accepts(const std::vector<SymbolId>& word) const;
};

/// Subset construction; only subsets reachable from the initial set are kept.
Dfa determinize(const Nfa& nfa);

/// Number of live Myhill–Nerode classes of the NFA's language: minimize the
/// determinized machine and count the classes from which acceptance is
/// reachable. The empty language has 0.
size_t minimal_dfa_size(const Nfa& nfa);

} // namespace lexfst

#endif
