#include "lexfst/fst.hpp"

#include <algorithm>
#include <deque>

namespace lexfst {

namespace {

void check_state(StateId q, size_t n, const char* where) {
    if (q >= n)
        throw ValidationError(std::string(where) + " references state " + std::to_string(q) +
                              " but the machine has " + std::to_string(n) + " states");
}

void check_symbol(const Alphabet& a, SymbolId s, const char* which) {
    if (!a.contains(s))
        throw ValidationError(std::string(which) + " symbol id " + std::to_string(s) +
                              " is not in the alphabet");
}

template <class M>
void check_state_sets(const M& m) {
    size_t n = m.num_states();
    for (StateId q : m.initial) check_state(q, n, "initial set");
    for (StateId q : m.final) check_state(q, n, "final set");
}

} // namespace

void LexTransducer::normalize_and_validate() {
    std::sort(transitions.begin(), transitions.end());
    transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());

    check_state_sets(*this);
    for (const LexTransition& t : transitions) {
        check_state(t.src, num_states(), "transition source");
        check_state(t.dst, num_states(), "transition target");
        check_symbol(inputs, t.input, "input");
        check_symbol(weights, t.weight, "weight");
        for (SymbolId g : t.output) check_symbol(outputs, g, "output");
    }
}

void TwoTapeAutomaton::normalize_and_validate() {
    std::sort(transitions.begin(), transitions.end());
    transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());

    check_state_sets(*this);
    for (const TwoTapeTransition& t : transitions) {
        check_state(t.src, num_states(), "transition source");
        check_state(t.dst, num_states(), "transition target");
        if (t.input) check_symbol(inputs, *t.input, "input");
        for (SymbolId g : t.output) check_symbol(outputs, g, "output");
    }
}

std::vector<StateId> TwoTapeAutomaton::trim() {
    size_t n = num_states();
    std::vector<char> fwd(n, 0), bwd(n, 0);

    // forward reachability from the initial states
    {
        std::deque<StateId> queue(initial.begin(), initial.end());
        for (StateId q : initial) fwd[q] = 1;
        std::vector<std::vector<StateId>> succ(n);
        for (const TwoTapeTransition& t : transitions) succ[t.src].push_back(t.dst);
        while (!queue.empty()) {
            StateId q = queue.front();
            queue.pop_front();
            for (StateId r : succ[q])
                if (!fwd[r]) {
                    fwd[r] = 1;
                    queue.push_back(r);
                }
        }
    }
    // backward reachability from the final states
    {
        std::deque<StateId> queue(final.begin(), final.end());
        for (StateId q : final) bwd[q] = 1;
        std::vector<std::vector<StateId>> pred(n);
        for (const TwoTapeTransition& t : transitions) pred[t.dst].push_back(t.src);
        while (!queue.empty()) {
            StateId q = queue.front();
            queue.pop_front();
            for (StateId r : pred[q])
                if (!bwd[r]) {
                    bwd[r] = 1;
                    queue.push_back(r);
                }
        }
    }

    std::vector<StateId> remap(n, kNoState);
    std::vector<std::string> kept_names;
    std::set<StateId> new_initial, new_final;
    for (StateId q = 0; q < n; ++q)
        if (fwd[q] && bwd[q]) {
            remap[q] = static_cast<StateId>(kept_names.size());
            kept_names.push_back(state_names[q]);
        }
    for (StateId q : initial)
        if (remap[q] != kNoState) new_initial.insert(remap[q]);
    for (StateId q : final)
        if (remap[q] != kNoState) new_final.insert(remap[q]);

    std::vector<TwoTapeTransition> kept;
    for (const TwoTapeTransition& t : transitions)
        if (remap[t.src] != kNoState && remap[t.dst] != kNoState)
            kept.push_back({remap[t.src], t.input, t.output, remap[t.dst]});

    state_names = std::move(kept_names);
    initial = std::move(new_initial);
    final = std::move(new_final);
    transitions = std::move(kept);
    return remap;
}

std::vector<std::string> default_state_names(size_t n, const std::string& prefix) {
    std::vector<std::string> names;
    names.reserve(n);
    for (size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

} // namespace lexfst
