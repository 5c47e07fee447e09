#include "lexfst/eval.hpp"

#include "lexfst/oracle.hpp"

namespace lexfst {

void merge_entry(Superposition& s, StateId q, Word weight, std::set<Word> outputs) {
    auto it = s.entries.find(q);
    if (it == s.entries.end()) {
        s.entries.emplace(q, SuperpositionEntry{std::move(weight), std::move(outputs)});
        return;
    }
    std::strong_ordering cmp = compare_weights(weight, it->second.weight);
    if (cmp == std::strong_ordering::less)
        it->second = {std::move(weight), std::move(outputs)};
    else if (cmp == std::strong_ordering::equal)
        it->second.outputs.merge(outputs);
    // a dominated branch is dropped: the minimum can never be overtaken
}

Superposition initial_superposition(const LexTransducer& m) {
    Superposition s;
    for (StateId q : m.initial) s.entries.emplace(q, SuperpositionEntry{{}, {Word{}}});
    return s;
}

Superposition step_superposition(const LexTransducer& m, const Superposition& s, SymbolId sigma) {
    if (!m.inputs.contains(sigma))
        throw ValidationError("input symbol id " + std::to_string(sigma) +
                              " is not in the machine's alphabet");
    Superposition next;
    next.consumed = s.consumed + 1;
    for (const auto& [q, entry] : s.entries) {
        if (entry.weight.size() != s.consumed)
            throw std::logic_error("superposition entry weight length out of sync");
        (void)q;
    }
    for (const LexTransition& t : m.transitions) {
        if (t.input != sigma) continue;
        auto it = s.entries.find(t.src);
        if (it == s.entries.end()) continue;
        Word weight = it->second.weight;
        weight.push_back(t.weight);
        std::set<Word> outputs;
        for (const Word& d : it->second.outputs) {
            Word extended = d;
            extended.insert(extended.end(), t.output.begin(), t.output.end());
            outputs.insert(std::move(extended));
        }
        merge_entry(next, t.dst, std::move(weight), std::move(outputs));
    }
    return next;
}

RunResult run(const LexTransducer& m, const Word& c) {
    Superposition s = initial_superposition(m);
    for (SymbolId sigma : c) {
        s = step_superposition(m, s, sigma);
        if (s.entries.empty()) break;  // nothing can revive an empty superposition
    }

    RunResult r;
    if (s.consumed != c.size()) return r;
    for (const auto& [q, entry] : s.entries) {
        if (!m.is_final(q)) continue;
        r.accepted = true;
        for (const Word& d : entry.outputs) {
            auto [it, fresh] = r.quotient.try_emplace(d, entry.weight);
            if (!fresh && weight_less(entry.weight, it->second)) it->second = entry.weight;
        }
    }
    for (const auto& [d, w] : r.quotient) {
        if (!r.min_weight || weight_less(w, *r.min_weight)) {
            r.min_weight = w;
            r.selected = {d};
        } else if (!weight_less(*r.min_weight, w)) {
            r.selected.insert(d);
        }
    }
    return r;
}

std::map<Word, Word> quotient(const LexTransducer& m, const Word& c, QuotientMode mode) {
    if (mode == QuotientMode::Pruned) return run(m, c).quotient;
    return oracle_run(m, c).quotient;
}

} // namespace lexfst
