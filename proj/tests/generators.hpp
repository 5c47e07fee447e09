#ifndef LEXFST_TESTS_GENERATORS_HPP
#define LEXFST_TESTS_GENERATORS_HPP

// Seeded pseudo-random machines for the property suites. Draws go through
// mt19937's raw output (whose sequence the standard pins down exactly), so
// every suite is reproducible across platforms and runs.

#include <random>
#include <string>
#include <vector>

#include "lexfst/fst.hpp"

namespace lexfst::testgen {

inline uint32_t pick(std::mt19937& rng, uint32_t n) { return rng() % n; }

inline Alphabet take(std::initializer_list<const char*> pool, size_t n) {
    Alphabet a;
    size_t i = 0;
    for (const char* t : pool) {
        if (i++ == n) break;
        a.add(t);
    }
    return a;
}

/// Arbitrary small machine: <= 5 states, |W| <= 3, |Sigma| <= 2, |Gamma| <= 2,
/// <= 12 transitions. Finals may be empty; a second initial shows up sometimes.
inline LexTransducer random_lex(uint32_t seed) {
    std::mt19937 rng(seed);
    LexTransducer m;
    uint32_t n_states = 1 + pick(rng, 5);
    m.weights = take({"a", "b", "c"}, 1 + pick(rng, 3));
    m.inputs = take({"x", "y"}, 1 + pick(rng, 2));
    m.outputs = take({"p", "q"}, pick(rng, 3));
    m.state_names = default_state_names(n_states, "s");
    m.initial.insert(pick(rng, n_states));
    if (pick(rng, 3) == 0) m.initial.insert(pick(rng, n_states));
    for (StateId q = 0; q < n_states; ++q)
        if (pick(rng, 2)) m.final.insert(q);
    uint32_t n_trans = pick(rng, 13);
    for (uint32_t i = 0; i < n_trans; ++i) {
        LexTransition t;
        t.src = pick(rng, n_states);
        t.input = pick(rng, uint32_t(m.inputs.size()));
        t.weight = pick(rng, uint32_t(m.weights.size()));
        t.dst = pick(rng, n_states);
        if (!m.outputs.empty()) {
            uint32_t len = pick(rng, 3);
            for (uint32_t j = 0; j < len; ++j)
                t.output.push_back(pick(rng, uint32_t(m.outputs.size())));
        }
        m.transitions.push_back(std::move(t));
    }
    m.normalize_and_validate();
    return m;
}

/// Machine that is deterministic up to the input tape: one initial state and
/// at most one transition per (state, symbol).
inline LexTransducer random_deterministic(uint32_t seed) {
    std::mt19937 rng(seed);
    LexTransducer m;
    uint32_t n_states = 1 + pick(rng, 5);
    m.weights = take({"a", "b", "c"}, 1 + pick(rng, 3));
    m.inputs = take({"x", "y"}, 1 + pick(rng, 2));
    m.outputs = take({"p", "q"}, pick(rng, 3));
    m.state_names = default_state_names(n_states, "s");
    m.initial.insert(pick(rng, n_states));
    for (StateId q = 0; q < n_states; ++q)
        if (pick(rng, 2)) m.final.insert(q);
    for (StateId q = 0; q < n_states; ++q)
        for (SymbolId a = 0; a < m.inputs.size(); ++a) {
            if (pick(rng, 3) == 0) continue;  // leave (q, a) undefined sometimes
            LexTransition t;
            t.src = q;
            t.input = a;
            t.weight = pick(rng, uint32_t(m.weights.size()));
            t.dst = pick(rng, n_states);
            if (!m.outputs.empty()) {
                uint32_t len = pick(rng, 3);
                for (uint32_t j = 0; j < len; ++j)
                    t.output.push_back(pick(rng, uint32_t(m.outputs.size())));
            }
            m.transitions.push_back(std::move(t));
        }
    m.normalize_and_validate();
    return m;
}

/// Arbitrary small two-tape automaton; ε inputs appear when allow_eps is set.
inline TwoTapeAutomaton random_two_tape(uint32_t seed, bool allow_eps) {
    std::mt19937 rng(seed);
    TwoTapeAutomaton n;
    uint32_t n_states = 1 + pick(rng, 5);
    n.inputs = take({"x", "y"}, 1 + pick(rng, 2));
    n.outputs = take({"p", "q"}, pick(rng, 3));
    n.state_names = default_state_names(n_states, "s");
    n.initial.insert(pick(rng, n_states));
    for (StateId q = 0; q < n_states; ++q)
        if (pick(rng, 2)) n.final.insert(q);
    uint32_t n_trans = pick(rng, 13);
    for (uint32_t i = 0; i < n_trans; ++i) {
        TwoTapeTransition t;
        t.src = pick(rng, n_states);
        if (allow_eps && pick(rng, 4) == 0)
            t.input = std::nullopt;
        else
            t.input = pick(rng, uint32_t(n.inputs.size()));
        t.dst = pick(rng, n_states);
        if (!n.outputs.empty()) {
            uint32_t len = pick(rng, 3);
            for (uint32_t j = 0; j < len; ++j)
                t.output.push_back(pick(rng, uint32_t(n.outputs.size())));
        }
        n.transitions.push_back(std::move(t));
    }
    n.normalize_and_validate();
    return n;
}

/// Two-tape automaton whose ε-cycle emits output and sits on an accepting
/// path, so bounded evaluation must refuse it. The cycle's length and the
/// position of the emitting edge vary with the seed.
inline TwoTapeAutomaton random_eps_cycle_machine(uint32_t seed) {
    std::mt19937 rng(seed);
    TwoTapeAutomaton n;
    n.inputs = take({"x"}, 1);
    n.outputs = take({"p", "q"}, 1 + pick(rng, 2));
    uint32_t cycle_len = 1 + pick(rng, 3);
    uint32_t n_states = cycle_len + 1;  // cycle states + a final state
    n.state_names = default_state_names(n_states, "s");
    n.initial.insert(0);
    n.final.insert(n_states - 1);
    uint32_t emit_at = pick(rng, cycle_len);
    for (uint32_t i = 0; i < cycle_len; ++i) {
        Word out;
        if (i == emit_at) out.push_back(pick(rng, uint32_t(n.outputs.size())));
        n.transitions.push_back({i, std::nullopt, std::move(out), (i + 1) % cycle_len});
    }
    n.transitions.push_back({0, SymbolId(0), {}, n_states - 1});
    n.normalize_and_validate();
    return n;
}

} // namespace lexfst::testgen

#endif
