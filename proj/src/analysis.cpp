#include "lexfst/analysis.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "lexfst/erase.hpp"

namespace lexfst {

ClassReport classify(const TwoTapeAutomaton& n) {
    ClassReport r;
    r.sequential_up_to_input = true;  // transitions carry at most one input symbol by type
    r.single_initial = n.initial.size() == 1;
    r.epsilon_free_up_to_input = true;
    std::set<std::pair<StateId, SymbolId>> seen;
    bool function_form = true;
    for (const TwoTapeTransition& t : n.transitions) {
        if (!t.input) {
            r.epsilon_free_up_to_input = false;
            function_form = false;
        } else if (!seen.insert({t.src, *t.input}).second) {
            function_form = false;
        }
    }
    r.deterministic_up_to_input = r.sequential_up_to_input && r.single_initial && function_form;
    return r;
}

ClassReport classify(const LexTransducer& m) {
    ClassReport r;
    r.sequential_up_to_input = true;  // exactly one input symbol per transition
    r.epsilon_free_up_to_input = true;
    r.single_initial = m.initial.size() == 1;
    std::set<std::pair<StateId, SymbolId>> seen;
    bool function_form = true;
    for (const LexTransition& t : m.transitions)
        if (!seen.insert({t.src, t.input}).second) function_form = false;
    r.deterministic_up_to_input = r.single_initial && function_form;
    return r;
}

std::vector<EpsCycle> detect_eps_cycles(const TwoTapeAutomaton& n) {
    // Elementary cycles of the ε-input subgraph, each anchored (and reported
    // once) at its smallest state. Exponential in the worst case, which is
    // fine at the machine sizes this certificate is used on.
    std::vector<size_t> eps;
    for (size_t i = 0; i < n.transitions.size(); ++i)
        if (!n.transitions[i].input) eps.push_back(i);

    std::vector<EpsCycle> cycles;
    std::vector<size_t> path;
    std::set<StateId> on_path;

    auto extend = [&](auto&& self, StateId anchor, StateId q) -> void {
        for (size_t i : eps) {
            const TwoTapeTransition& t = n.transitions[i];
            if (t.src != q || t.dst < anchor) continue;
            if (t.dst == anchor) {
                EpsCycle cycle;
                for (size_t j : path) {
                    cycle.transitions.push_back(n.transitions[j]);
                    cycle.output.insert(cycle.output.end(), n.transitions[j].output.begin(),
                                        n.transitions[j].output.end());
                }
                cycle.transitions.push_back(t);
                cycle.output.insert(cycle.output.end(), t.output.begin(), t.output.end());
                if (!cycle.output.empty()) cycles.push_back(std::move(cycle));
                continue;
            }
            if (on_path.count(t.dst)) continue;
            path.push_back(i);
            on_path.insert(t.dst);
            self(self, anchor, t.dst);
            on_path.erase(t.dst);
            path.pop_back();
        }
    };
    for (StateId anchor = 0; anchor < n.num_states(); ++anchor) {
        on_path = {anchor};
        path.clear();
        extend(extend, anchor, anchor);
    }
    return cycles;
}

std::set<Word> eval_two_tape(const TwoTapeAutomaton& source, const Word& c) {
    for (SymbolId a : c)
        if (!source.inputs.contains(a))
            throw ValidationError("input symbol id " + std::to_string(a) +
                                  " is not in the machine's alphabet");
    TwoTapeAutomaton n = source;
    n.trim();
    if (!detect_eps_cycles(n).empty())
        throw ValidationError(
            "infinite output set possible: a reachable ε-input cycle emits output");

    auto by_src = transitions_by_source(n);
    using Branch = std::pair<StateId, Word>;  // state + output so far
    std::set<Branch> frontier;

    auto close = [&](std::set<Branch>& s) {
        std::deque<Branch> work(s.begin(), s.end());
        while (!work.empty()) {
            auto [q, d] = work.front();
            work.pop_front();
            for (size_t i : by_src[q]) {
                const TwoTapeTransition& t = n.transitions[i];
                if (t.input) continue;
                Word d2 = d;
                d2.insert(d2.end(), t.output.begin(), t.output.end());
                Branch b{t.dst, std::move(d2)};
                if (s.insert(b).second) work.push_back(b);
            }
        }
    };

    for (StateId q : n.initial) frontier.insert({q, {}});
    close(frontier);
    for (SymbolId a : c) {
        std::set<Branch> next;
        for (const auto& [q, d] : frontier)
            for (size_t i : by_src[q]) {
                const TwoTapeTransition& t = n.transitions[i];
                if (!t.input || *t.input != a) continue;
                Word d2 = d;
                d2.insert(d2.end(), t.output.begin(), t.output.end());
                next.insert({t.dst, std::move(d2)});
            }
        close(next);
        frontier = std::move(next);
        if (frontier.empty()) break;
    }

    std::set<Word> outputs;
    for (const auto& [q, d] : frontier)
        if (n.is_final(q)) outputs.insert(d);
    return outputs;
}

ConflictReport find_conflicts(const LexTransducer& m) {
    // co-reachability of ordered state pairs in the input-synchronized square
    size_t ns = m.num_states();
    std::vector<char> reach(ns * ns, 0);
    {
        auto by_src = transitions_by_source(m);
        std::deque<std::pair<StateId, StateId>> work;
        for (StateId a : m.initial)
            for (StateId b : m.initial) {
                reach[a * ns + b] = 1;
                work.push_back({a, b});
            }
        while (!work.empty()) {
            auto [a, b] = work.front();
            work.pop_front();
            for (size_t i : by_src[a])
                for (size_t j : by_src[b]) {
                    const LexTransition& t1 = m.transitions[i];
                    const LexTransition& t2 = m.transitions[j];
                    if (t1.input != t2.input) continue;
                    if (!reach[t1.dst * ns + t2.dst]) {
                        reach[t1.dst * ns + t2.dst] = 1;
                        work.push_back({t1.dst, t2.dst});
                    }
                }
        }
    }

    // group transitions by (input, target); any two distinct members conflict
    std::map<std::pair<SymbolId, StateId>, std::vector<size_t>> groups;
    for (size_t i = 0; i < m.transitions.size(); ++i)
        groups[{m.transitions[i].input, m.transitions[i].dst}].push_back(i);

    ConflictReport report;
    for (const auto& [key, members] : groups)
        for (size_t i = 0; i < members.size(); ++i)
            for (size_t j = i + 1; j < members.size(); ++j) {
                const LexTransition& t1 = m.transitions[members[i]];
                const LexTransition& t2 = m.transitions[members[j]];
                Conflict c;
                c.q1 = t1.src;
                c.q2 = t2.src;
                c.input = key.first;
                c.target = key.second;
                c.w1 = t1.weight;
                c.w2 = t2.weight;
                c.equal_weights = t1.weight == t2.weight;
                c.co_reachable = reach[t1.src * ns + t2.src] != 0;
                report.pairs.push_back(c);
            }
    return report;
}

StrongFunctionalReport check_strongly_functional(const LexTransducer& m) {
    StrongFunctionalReport r;
    if (m.final.size() != 1) {
        r.holds = false;
        r.finals.assign(m.final.begin(), m.final.end());
        r.reason = "expected exactly one final state, found " + std::to_string(m.final.size());
        return r;
    }
    for (const Conflict& c : find_conflicts(m).pairs) {
        if (c.equal_weights && c.co_reachable) {
            r.holds = false;
            r.conflict = c;
            r.reason = "equal-weight conflict: states " + m.state_names[c.q1] + " and " +
                       m.state_names[c.q2] + " both reach " + m.state_names[c.target] +
                       " over " + m.inputs.token(c.input) + " with weight " +
                       m.weights.token(c.w1);
            return r;
        }
    }
    r.holds = true;
    return r;
}

namespace {

// Reduced pair of output residuals of two same-input paths. Once the
// residuals diverge on their first symbol the runs can never produce equal
// outputs again, which `mismatch` records.
struct Delay {
    bool mismatch = false;
    Word a;
    Word b;
    friend bool operator==(const Delay&, const Delay&) = default;
};

Delay extend_delay(const Delay& d, const Word& out1, const Word& out2) {
    if (d.mismatch) return d;
    Word a = d.a;
    a.insert(a.end(), out1.begin(), out1.end());
    Word b = d.b;
    b.insert(b.end(), out2.begin(), out2.end());
    size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    a.erase(a.begin(), a.begin() + k);
    b.erase(b.begin(), b.begin() + k);
    if (!a.empty() && !b.empty()) return {true, {}, {}};
    return {false, std::move(a), std::move(b)};
}

} // namespace

FunctionalReport check_functional_unweighted(const TwoTapeAutomaton& source) {
    for (const TwoTapeTransition& t : source.transitions)
        if (!t.input)
            throw ValidationError("functionality test requires an input-ε-free machine");

    TwoTapeAutomaton n = source;
    n.trim();
    size_t ns = n.num_states();
    if (ns == 0) return {true, std::nullopt};

    auto by_src = transitions_by_source(n);
    auto pid = [ns](StateId a, StateId b) { return size_t(a) * ns + b; };

    struct Edge {
        size_t target;
        SymbolId sym;
        const Word* out1;
        const Word* out2;
    };
    auto edges_of = [&](size_t p) {
        StateId a = StateId(p / ns), b = StateId(p % ns);
        std::vector<Edge> es;
        for (size_t i : by_src[a])
            for (size_t j : by_src[b]) {
                const TwoTapeTransition& t1 = n.transitions[i];
                const TwoTapeTransition& t2 = n.transitions[j];
                if (*t1.input != *t2.input) continue;
                es.push_back({pid(t1.dst, t2.dst), *t1.input, &t1.output, &t2.output});
            }
        return es;
    };

    // pair co-accessibility + a completion pointer toward some final pair
    std::vector<char> coacc(ns * ns, 0);
    std::vector<size_t> comp_next(ns * ns, size_t(-1));
    std::vector<SymbolId> comp_sym(ns * ns, 0);
    {
        std::vector<std::vector<std::pair<size_t, SymbolId>>> preds(ns * ns);
        for (size_t p = 0; p < ns * ns; ++p)
            for (const Edge& e : edges_of(p)) preds[e.target].push_back({p, e.sym});
        std::deque<size_t> work;
        for (StateId f1 : n.final)
            for (StateId f2 : n.final) {
                coacc[pid(f1, f2)] = 1;
                work.push_back(pid(f1, f2));
            }
        while (!work.empty()) {
            size_t p = work.front();
            work.pop_front();
            for (auto [q, sym] : preds[p])
                if (!coacc[q]) {
                    coacc[q] = 1;
                    comp_next[q] = p;
                    comp_sym[q] = sym;
                    work.push_back(q);
                }
        }
    }

    // forward breadth-first search from I×I over co-accessible pairs,
    // storing the first delay seen and a parent pointer for witnesses
    std::vector<std::optional<Delay>> stored(ns * ns);
    std::vector<size_t> parent(ns * ns, size_t(-1));
    std::vector<SymbolId> parent_sym(ns * ns, 0);
    std::deque<size_t> work;

    auto input_to = [&](size_t p) {
        Word w;
        while (parent[p] != size_t(-1) && parent[p] != p) {
            w.push_back(parent_sym[p]);
            p = parent[p];
        }
        std::reverse(w.begin(), w.end());
        return w;
    };
    auto completion_from = [&](size_t p) {
        Word w;
        while (comp_next[p] != size_t(-1)) {
            w.push_back(comp_sym[p]);
            p = comp_next[p];
        }
        return w;
    };
    auto confirmed = [&](const Word& input) {
        return eval_two_tape(n, input).size() >= 2;
    };
    auto is_final_pair = [&](size_t p) {
        return n.is_final(StateId(p / ns)) && n.is_final(StateId(p % ns));
    };

    // a delay is acceptable at a final pair only when it is (ε,ε)
    auto violation_at = [&](size_t p, const Delay& d) {
        return d.mismatch || (is_final_pair(p) && !(d.a.empty() && d.b.empty()));
    };

    for (StateId a : n.initial)
        for (StateId b : n.initial) {
            size_t p = pid(a, b);
            if (!coacc[p] || stored[p]) continue;
            stored[p] = Delay{};
            parent[p] = p;
            work.push_back(p);
        }
    while (!work.empty()) {
        size_t p = work.front();
        work.pop_front();
        for (const Edge& e : edges_of(p)) {
            if (!coacc[e.target]) continue;
            Delay d = extend_delay(*stored[p], *e.out1, *e.out2);
            if (!stored[e.target]) {
                stored[e.target] = d;
                parent[e.target] = p;
                parent_sym[e.target] = e.sym;
                if (violation_at(e.target, d)) {
                    Word witness = input_to(e.target);
                    Word z = completion_from(e.target);
                    witness.insert(witness.end(), z.begin(), z.end());
                    if (!confirmed(witness))
                        throw std::logic_error("functionality witness failed confirmation");
                    return {false, witness};
                }
                work.push_back(e.target);
            } else if (!(*stored[e.target] == d)) {
                // two distinct delays at one pair: at least one of the two
                // arrival paths extends to an input with two outputs
                Word z = completion_from(e.target);
                Word first = input_to(e.target);
                first.insert(first.end(), z.begin(), z.end());
                Word second = input_to(p);
                second.push_back(e.sym);
                second.insert(second.end(), z.begin(), z.end());
                if (confirmed(first)) return {false, first};
                if (confirmed(second)) return {false, second};
                throw std::logic_error("functionality witness failed confirmation");
            }
        }
    }
    return {true, std::nullopt};
}

FunctionalReport check_functional(const LexTransducer& m) {
    return check_functional_unweighted(erase_general(m));
}

bool Dfa::accepts(const std::vector<SymbolId>& word) const {
    StateId q = start;
    for (SymbolId a : word) q = step(q, a);
    return accepting[q] != 0;
}

Dfa determinize(const Nfa& nfa) {
    size_t nsym = nfa.alphabet.size();
    std::vector<std::vector<std::pair<SymbolId, StateId>>> by_src(nfa.num_states);
    for (const NfaTransition& t : nfa.transitions) by_src[t.src].push_back({t.symbol, t.dst});

    std::map<std::vector<StateId>, StateId> ids;
    std::vector<std::vector<StateId>> subsets;
    auto intern = [&](std::vector<StateId> subset) {
        auto [it, fresh] = ids.try_emplace(std::move(subset), StateId(subsets.size()));
        if (fresh) subsets.push_back(it->first);
        return it->second;
    };

    Dfa d;
    d.num_symbols = nsym;
    d.start = intern({nfa.initial.begin(), nfa.initial.end()});
    for (StateId q = 0; q < subsets.size(); ++q) {
        std::vector<std::set<StateId>> succ(nsym);
        for (StateId s : subsets[q])
            for (auto [a, dst] : by_src[s]) succ[a].insert(dst);
        for (SymbolId a = 0; a < nsym; ++a)
            d.next.push_back(intern({succ[a].begin(), succ[a].end()}));
    }
    d.num_states = subsets.size();
    d.accepting.assign(d.num_states, 0);
    for (StateId q = 0; q < d.num_states; ++q)
        for (StateId s : subsets[q])
            if (nfa.final.count(s)) d.accepting[q] = 1;
    return d;
}

size_t minimal_dfa_size(const Nfa& nfa) {
    Dfa d = determinize(nfa);
    size_t ns = d.num_states, nsym = d.num_symbols;

    // Moore partition refinement on the complete automaton
    std::vector<uint32_t> cls(ns);
    for (size_t q = 0; q < ns; ++q) cls[q] = d.accepting[q] ? 1 : 0;
    size_t count = 0;
    for (;;) {
        std::map<std::vector<uint32_t>, uint32_t> sig_ids;
        std::vector<uint32_t> next_cls(ns);
        for (size_t q = 0; q < ns; ++q) {
            std::vector<uint32_t> sig{cls[q]};
            for (SymbolId a = 0; a < nsym; ++a) sig.push_back(cls[d.step(StateId(q), a)]);
            auto [it, fresh] = sig_ids.try_emplace(std::move(sig), uint32_t(sig_ids.size()));
            next_cls[q] = it->second;
        }
        if (sig_ids.size() == count) break;
        count = sig_ids.size();
        cls = std::move(next_cls);
    }

    // count classes that can reach acceptance ("live"); dead classes (and the
    // sink for undeclared strings) are not part of the recognizer proper
    std::vector<char> live(ns, 0);
    std::deque<size_t> work;
    for (size_t q = 0; q < ns; ++q)
        if (d.accepting[q]) {
            live[q] = 1;
            work.push_back(q);
        }
    std::vector<std::vector<size_t>> preds(ns);
    for (size_t q = 0; q < ns; ++q)
        for (SymbolId a = 0; a < nsym; ++a) preds[d.step(StateId(q), a)].push_back(q);
    while (!work.empty()) {
        size_t q = work.front();
        work.pop_front();
        for (size_t p : preds[q])
            if (!live[p]) {
                live[p] = 1;
                work.push_back(p);
            }
    }
    std::set<uint32_t> live_classes;
    for (size_t q = 0; q < ns; ++q)
        if (live[q]) live_classes.insert(cls[q]);
    return live_classes.size();
}

} // namespace lexfst
