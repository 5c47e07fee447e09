#ifndef LEXFST_FST_HPP
#define LEXFST_FST_HPP

#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lexfst/alphabet.hpp"

namespace lexfst {

/// Sentinel for "state removed" in remapping tables.
inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();

/// One transition of a lexicographic transducer: exactly one input symbol,
/// exactly one weight symbol, and an output word (possibly empty).
struct LexTransition {
    StateId src;
    SymbolId input;
    SymbolId weight;
    Word output;
    StateId dst;

    friend auto operator<=>(const LexTransition&, const LexTransition&) = default;
};

/// A transducer over W* x Sigma* x Gamma* whose weight tape carries one
/// symbol per step, compared suffix-dominantly (see weight_order.hpp).
struct LexTransducer {
    Alphabet weights;  // ascending order; rank of a symbol is its position
    Alphabet inputs;
    Alphabet outputs;
    std::vector<std::string> state_names;
    std::set<StateId> initial;
    std::set<StateId> final;
    std::vector<LexTransition> transitions;  // kept sorted and deduplicated

    size_t num_states() const { return state_names.size(); }
    bool is_initial(StateId q) const { return initial.count(q) != 0; }
    bool is_final(StateId q) const { return final.count(q) != 0; }

    /// Sorts and deduplicates transitions, then checks all containment
    /// invariants; throws ValidationError on the first violation.
    void normalize_and_validate();

    friend bool operator==(const LexTransducer&, const LexTransducer&) = default;
};

/// Unweighted transition over Sigma* x Gamma*; the input may be empty.
struct TwoTapeTransition {
    StateId src;
    std::optional<SymbolId> input;  // nullopt = epsilon
    Word output;
    StateId dst;

    bool input_is_epsilon() const { return !input.has_value(); }
    friend auto operator<=>(const TwoTapeTransition&, const TwoTapeTransition&) = default;
};

/// A 2-tape automaton over Sigma* x Gamma*: the result type of weight
/// erasure and the input to functionality checks and encoding.
struct TwoTapeAutomaton {
    Alphabet inputs;
    Alphabet outputs;
    std::vector<std::string> state_names;
    std::set<StateId> initial;
    std::set<StateId> final;
    std::vector<TwoTapeTransition> transitions;

    size_t num_states() const { return state_names.size(); }
    bool is_initial(StateId q) const { return initial.count(q) != 0; }
    bool is_final(StateId q) const { return final.count(q) != 0; }

    void normalize_and_validate();

    /// Restricts to states both reachable from an initial state and able to
    /// reach a final state. Returns the old-index -> new-index map, with
    /// kNoState marking removed states.
    std::vector<StateId> trim();

    friend bool operator==(const TwoTapeAutomaton&, const TwoTapeAutomaton&) = default;
};

/// Plain single-tape NFA; the target of the single-tape encoding and the
/// input to determinization.
struct NfaTransition {
    StateId src;
    SymbolId symbol;
    StateId dst;
    friend auto operator<=>(const NfaTransition&, const NfaTransition&) = default;
};

struct Nfa {
    Alphabet alphabet;
    size_t num_states = 0;
    std::set<StateId> initial;
    std::set<StateId> final;
    std::vector<NfaTransition> transitions;
};

/// "q0", "q1", ... for machines built in code rather than parsed.
std::vector<std::string> default_state_names(size_t n, const std::string& prefix = "q");

/// Transition indices grouped by source state; shared by the algorithms.
template <class Machine>
std::vector<std::vector<size_t>> transitions_by_source(const Machine& m) {
    std::vector<std::vector<size_t>> by_src(m.num_states());
    for (size_t i = 0; i < m.transitions.size(); ++i) by_src[m.transitions[i].src].push_back(i);
    return by_src;
}

} // namespace lexfst

#endif
