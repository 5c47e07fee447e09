#ifndef LEXFST_PROB_HPP
#define LEXFST_PROB_HPP

#include <set>
#include <string>
#include <vector>

#include "lexfst/alphabet.hpp"
#include "lexfst/rational.hpp"

namespace lexfst {

/// A subinterval of (0,1); weight symbols of a probabilistic machine denote
/// intervals, and composing them nests the later interval inside the earlier.
struct Interval {
    Rational lo;
    Rational hi;

    Interval(Rational l, Rational h);
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Affine composition: maps y into x. Identity is (0,1).
Interval interval_mul(const Interval& x, const Interval& y);

/// Length of the interval = the probability mass of the weight word.
Rational interval_norm(const Interval& x);

/// Drops every word that has a proper prefix in the set (so masses of the
/// survivors can be summed without double-counting).
std::set<std::vector<uint32_t>> prefix_free_reduce(const std::set<std::vector<uint32_t>>& words);

/// A probabilistic acceptor/transducer: the unit interval is cut into N
/// pieces, and each transition consumes one piece index k in 1..N while
/// emitting an output word (and, if a second tape is declared, a second
/// output word).
struct ProbTransition {
    StateId src;
    uint32_t k;   // 1-based interval index
    Word output;  // over gamma
    Word output2; // over delta; empty unless delta is declared
    StateId dst;

    friend auto operator<=>(const ProbTransition&, const ProbTransition&) = default;
};

struct ProbAutomaton {
    std::vector<Rational> cuts;  // 0 = cuts[0] < ... < cuts[N] = 1
    Alphabet gamma;
    Alphabet delta;  // optional second output tape; empty when unused
    std::vector<std::string> state_names;
    StateId initial = 0;
    std::set<StateId> final;
    std::vector<ProbTransition> transitions;

    size_t num_states() const { return state_names.size(); }
    size_t num_intervals() const { return cuts.empty() ? 0 : cuts.size() - 1; }
    bool has_second_tape() const { return !delta.empty(); }
    Interval interval(uint32_t k) const;  // k in 1..N

    /// Checks cut monotonicity/endpoints, symbol containment, and that at
    /// most one transition leaves each (state, interval) pair.
    void normalize_and_validate();
};

/// Sound enclosure of a probability explored to a finite path depth: the
/// true value lies in [lower, upper]; the gap is the mass of paths still
/// alive at the depth limit.
struct ProbBracket {
    Rational lower;
    Rational upper;
    size_t depth = 0;

    friend bool operator==(const ProbBracket&, const ProbBracket&) = default;
};

/// P(c): mass of minimal weight words whose accepting paths output exactly c.
ProbBracket prob_bracket(const ProbAutomaton& p, const Word& c, size_t depth);

/// P(c,d): both tapes must match (requires a declared second tape).
ProbBracket prob_bracket(const ProbAutomaton& p, const Word& c, const Word& d, size_t depth);

/// P(d|c) as an interval quotient of the two brackets; throws when the
/// conditioning event has upper probability 0.
ProbBracket cond_prob(const ProbAutomaton& p, const Word& c, const Word& d, size_t depth);

} // namespace lexfst

#endif
