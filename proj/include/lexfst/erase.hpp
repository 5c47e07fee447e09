#ifndef LEXFST_ERASE_HPP
#define LEXFST_ERASE_HPP

#include <optional>

#include "lexfst/fst.hpp"

namespace lexfst {

/// Weak ordering, by accumulated weight, of the states a run over some fixed
/// input can currently occupy: classes[0] holds the states with the smallest
/// weight, ties share a class. epsilon_bottom marks the start-of-input
/// formula, whose single class carries the empty weight.
struct OrderFormula {
    std::vector<std::set<StateId>> classes;
    bool epsilon_bottom = false;

    bool empty() const { return classes.empty(); }

    /// Index of the class containing q, or nullopt when q is not covered.
    std::optional<size_t> class_of(StateId q) const;

    friend auto operator<=>(const OrderFormula&, const OrderFormula&) = default;
};

/// The formula holding before any input is consumed: one epsilon-weight
/// class containing every initial state.
OrderFormula initial_formula(const LexTransducer& m);

/// Advances phi over one input symbol. Each reachable target's new weight is
/// summarized by the minimum (weight-symbol rank, source class index) pair
/// over its incoming transitions -- one suffix-dominant comparison step --
/// and targets are grouped into classes by that minimum. Returns the empty
/// formula when no transition from phi's states consumes sigma.
OrderFormula successor_formula(const LexTransducer& m, const OrderFormula& phi, SymbolId sigma);

/// Replaces minimum-weight selection by an unweighted two-tape automaton via
/// the order-formula powerset construction: states are pairs (q, phi) plus an
/// accepting sink; transitions whose (weight rank, class) pair is beaten
/// within their (phi, input, target) group are pruned. The result accepts
/// exactly { (c, d) : d in run(M, c).selected }.
TwoTapeAutomaton erase_general(const LexTransducer& m);

/// erase_general plus construction metadata, for inspection and tests.
struct ErasedGeneral {
    TwoTapeAutomaton automaton;
    std::vector<OrderFormula> formulas;             ///< interned formulas, by id
    std::vector<std::optional<size_t>> formula_id;  ///< per state; nullopt = the sink
    std::optional<StateId> sink;                    ///< absent when trimmed away
};

ErasedGeneral erase_general_full(const LexTransducer& m);

/// The cheaper configuration-pair construction. States are pairs
/// (configuration K, member q); pruning compares weight-symbol ranks only,
/// which suffices because the precondition rules out equal-weight conflicts.
/// Requires check_strongly_functional(m); throws ValidationError otherwise.
TwoTapeAutomaton erase_strong(const LexTransducer& m);

} // namespace lexfst

#endif
