#include "lexfst/oracle.hpp"

#include "lexfst/analysis.hpp"

namespace lexfst {

std::vector<PathWitness> enumerate_accepting(const LexTransducer& m, const Word& c) {
    auto by_src = transitions_by_source(m);
    std::vector<PathWitness> witnesses;
    PathWitness path;

    // depth-first over path positions; transitions are sorted, so the
    // witness order is deterministic
    auto extend = [&](auto&& self, StateId q, size_t pos) -> void {
        if (pos == c.size()) {
            if (m.is_final(q)) witnesses.push_back(path);
            return;
        }
        for (size_t i : by_src[q]) {
            const LexTransition& t = m.transitions[i];
            if (t.input != c[pos]) continue;
            path.transitions.push_back(t);
            path.weight.push_back(t.weight);
            path.output.insert(path.output.end(), t.output.begin(), t.output.end());
            self(self, t.dst, pos + 1);
            path.transitions.pop_back();
            path.weight.pop_back();
            path.output.resize(path.output.size() - t.output.size());
        }
    };
    for (StateId q : m.initial) extend(extend, q, 0);
    return witnesses;
}

RunResult oracle_run(const LexTransducer& m, const Word& c) {
    RunResult r;
    for (const PathWitness& w : enumerate_accepting(m, c)) {
        r.accepted = true;
        auto [it, fresh] = r.quotient.try_emplace(w.output, w.weight);
        if (!fresh && weight_less(w.weight, it->second)) it->second = w.weight;
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

std::set<Word> oracle_two_tape_outputs(const TwoTapeAutomaton& n, const Word& c) {
    auto by_src = transitions_by_source(n);
    std::set<Word> outputs;
    Word produced;
    std::set<StateId> eps_segment;  // states seen since the last input symbol

    auto extend = [&](auto&& self, StateId q, size_t pos) -> void {
        if (pos == c.size() && n.is_final(q)) outputs.insert(produced);
        for (size_t i : by_src[q]) {
            const TwoTapeTransition& t = n.transitions[i];
            size_t next_pos = pos;
            if (t.input) {
                if (pos == c.size() || *t.input != c[pos]) continue;
                next_pos = pos + 1;
            } else if (eps_segment.count(t.dst)) {
                continue;  // an ε-loop that re-enters the segment emits ε; skipping it loses no output
            }
            std::set<StateId> saved;
            if (t.input) {
                saved = std::move(eps_segment);
                eps_segment = {t.dst};
            } else {
                eps_segment.insert(t.dst);
            }
            produced.insert(produced.end(), t.output.begin(), t.output.end());
            self(self, t.dst, next_pos);
            produced.resize(produced.size() - t.output.size());
            if (t.input) eps_segment = std::move(saved);
            else eps_segment.erase(t.dst);
        }
    };
    for (StateId q : n.initial) {
        eps_segment = {q};
        extend(extend, q, 0);
    }
    return outputs;
}

void for_each_word(size_t symbols, size_t max_len, const std::function<bool(const Word&)>& fn) {
    Word w;
    if (!fn(w)) return;
    if (symbols == 0) return;
    for (size_t len = 1; len <= max_len; ++len) {
        w.assign(len, 0);
        for (;;) {
            if (!fn(w)) return;
            // odometer increment
            size_t i = len;
            while (i > 0) {
                if (++w[i - 1] < symbols) break;
                w[i - 1] = 0;
                --i;
            }
            if (i == 0) break;
        }
    }
}

Divergence oracle_equivalence(const LexTransducer& m, size_t max_len) {
    Divergence d;
    for_each_word(m.inputs.size(), max_len, [&](const Word& c) {
        RunResult fast = run(m, c);
        RunResult slow = oracle_run(m, c);
        if (fast.accepted != slow.accepted || fast.selected != slow.selected ||
            fast.min_weight != slow.min_weight) {
            d.equivalent = false;
            d.input = c;
            return false;
        }
        return true;
    });
    return d;
}

Divergence oracle_erasure_equivalence(const LexTransducer& m, const TwoTapeAutomaton& n,
                                      size_t max_len) {
    Divergence d;
    for_each_word(m.inputs.size(), max_len, [&](const Word& c) {
        if (eval_two_tape(n, c) != oracle_run(m, c).selected) {
            d.equivalent = false;
            d.input = c;
            return false;
        }
        return true;
    });
    return d;
}

} // namespace lexfst
