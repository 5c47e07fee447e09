#include "lexfst/erase.hpp"

#include <deque>
#include <map>

#include "lexfst/analysis.hpp"

namespace lexfst {

std::optional<size_t> OrderFormula::class_of(StateId q) const {
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i].count(q)) return i;
    return std::nullopt;
}

OrderFormula initial_formula(const LexTransducer& m) {
    OrderFormula phi;
    if (m.initial.empty()) return phi;
    phi.classes.push_back(m.initial);
    phi.epsilon_bottom = true;
    return phi;
}

OrderFormula successor_formula(const LexTransducer& m, const OrderFormula& phi, SymbolId sigma) {
    // Weight-symbol ids double as ranks: the weight alphabet is ascending.
    using WeightPair = std::pair<SymbolId, size_t>;
    std::map<StateId, WeightPair> best;
    for (const LexTransition& t : m.transitions) {
        if (t.input != sigma) continue;
        auto cls = phi.class_of(t.src);
        if (!cls) continue;
        WeightPair p{t.weight, *cls};
        auto [it, fresh] = best.try_emplace(t.dst, p);
        if (!fresh && p < it->second) it->second = p;
    }
    std::map<WeightPair, std::set<StateId>> grouped;
    for (const auto& [q, p] : best) grouped[p].insert(q);

    OrderFormula next;
    for (auto& [p, states] : grouped) next.classes.push_back(std::move(states));
    return next;
}

ErasedGeneral erase_general_full(const LexTransducer& m) {
    std::map<OrderFormula, size_t> formula_ids;
    std::vector<OrderFormula> formulas;
    auto intern = [&](OrderFormula phi) {
        auto [it, fresh] = formula_ids.try_emplace(std::move(phi), formulas.size());
        if (fresh) formulas.push_back(it->first);
        return std::pair{it->second, fresh};
    };

    TwoTapeAutomaton n;
    n.inputs = m.inputs;
    n.outputs = m.outputs;

    constexpr StateId kSink = 0;
    n.state_names.push_back("f");
    n.final.insert(kSink);
    std::vector<std::optional<size_t>> formula_id{std::nullopt};

    std::map<std::pair<StateId, size_t>, StateId> state_ids;
    auto state_of = [&](StateId q, size_t phi) {
        auto [it, fresh] =
            state_ids.try_emplace({q, phi}, static_cast<StateId>(n.state_names.size()));
        if (fresh) {
            n.state_names.push_back(m.state_names[q] + "@" + std::to_string(phi));
            formula_id.push_back(phi);
        }
        return it->second;
    };

    auto by_input = [&] {
        std::vector<std::vector<size_t>> idx(m.inputs.size());
        for (size_t i = 0; i < m.transitions.size(); ++i)
            idx[m.transitions[i].input].push_back(i);
        return idx;
    }();

    OrderFormula phi0 = initial_formula(m);
    std::deque<size_t> work;
    if (!phi0.empty()) {
        size_t id0 = intern(phi0).first;
        work.push_back(id0);
        for (StateId q : m.initial) n.initial.insert(state_of(q, id0));
    }
    for (StateId q : m.initial)
        if (m.is_final(q)) n.initial.insert(kSink);

    using WeightPair = std::pair<SymbolId, size_t>;
    while (!work.empty()) {
        size_t phi_id = work.front();
        work.pop_front();
        const OrderFormula phi = formulas[phi_id];
        for (SymbolId sigma = 0; sigma < m.inputs.size(); ++sigma) {
            OrderFormula succ = successor_formula(m, phi, sigma);
            if (succ.empty()) continue;
            auto [succ_id, fresh] = intern(std::move(succ));
            if (fresh) work.push_back(succ_id);

            // group candidate transitions by target; the sink is one more
            // target collecting every copy into an accepting state
            std::map<StateId, std::vector<size_t>> per_target;
            std::vector<size_t> into_sink;
            for (size_t i : by_input[sigma]) {
                const LexTransition& t = m.transitions[i];
                if (!phi.class_of(t.src)) continue;
                per_target[t.dst].push_back(i);
                if (m.is_final(t.dst)) into_sink.push_back(i);
            }
            auto pair_of = [&](size_t i) {
                return WeightPair{m.transitions[i].weight, *phi.class_of(m.transitions[i].src)};
            };
            auto emit_min = [&](const std::vector<size_t>& group, StateId target) {
                WeightPair min = pair_of(group.front());
                for (size_t i : group) min = std::min(min, pair_of(i));
                for (size_t i : group)
                    if (pair_of(i) == min) {
                        const LexTransition& t = m.transitions[i];
                        n.transitions.push_back(
                            {state_of(t.src, phi_id), t.input, t.output, target});
                    }
            };
            for (const auto& [dst, group] : per_target)
                emit_min(group, state_of(dst, succ_id));
            if (!into_sink.empty()) emit_min(into_sink, kSink);
        }
    }

    n.normalize_and_validate();
    std::vector<StateId> remap = n.trim();

    ErasedGeneral result;
    result.automaton = std::move(n);
    result.formulas = std::move(formulas);
    result.formula_id.resize(result.automaton.num_states());
    for (size_t old = 0; old < remap.size(); ++old)
        if (remap[old] != kNoState) result.formula_id[remap[old]] = formula_id[old];
    if (remap[kSink] != kNoState) result.sink = remap[kSink];
    return result;
}

TwoTapeAutomaton erase_general(const LexTransducer& m) {
    return erase_general_full(m).automaton;
}

TwoTapeAutomaton erase_strong(const LexTransducer& m) {
    StrongFunctionalReport pre = check_strongly_functional(m);
    if (!pre.holds) throw ValidationError("machine is not strongly functional: " + pre.reason);

    std::map<std::set<StateId>, size_t> config_ids;
    std::vector<std::set<StateId>> configs;
    auto intern = [&](std::set<StateId> k) {
        auto [it, fresh] = config_ids.try_emplace(std::move(k), configs.size());
        if (fresh) configs.push_back(it->first);
        return it->second;
    };

    TwoTapeAutomaton n;
    n.inputs = m.inputs;
    n.outputs = m.outputs;
    std::map<std::pair<size_t, StateId>, StateId> state_ids;
    auto state_of = [&](size_t cfg, StateId q) {
        auto [it, fresh] =
            state_ids.try_emplace({cfg, q}, static_cast<StateId>(n.state_names.size()));
        if (fresh) {
            n.state_names.push_back("c" + std::to_string(cfg) + "@" + m.state_names[q]);
            if (m.is_final(q)) n.final.insert(it->second);
        }
        return it->second;
    };

    auto by_input = [&] {
        std::vector<std::vector<size_t>> idx(m.inputs.size());
        for (size_t i = 0; i < m.transitions.size(); ++i)
            idx[m.transitions[i].input].push_back(i);
        return idx;
    }();

    std::deque<size_t> work;
    if (!m.initial.empty()) {
        size_t k0 = intern(m.initial);
        work.push_back(k0);
        for (StateId q : m.initial) n.initial.insert(state_of(k0, q));
    }

    std::set<size_t> expanded;
    while (!work.empty()) {
        size_t cfg = work.front();
        work.pop_front();
        if (!expanded.insert(cfg).second) continue;
        const std::set<StateId> k = configs[cfg];
        for (SymbolId sigma = 0; sigma < m.inputs.size(); ++sigma) {
            std::set<StateId> image;
            std::map<StateId, std::vector<size_t>> per_target;
            for (size_t i : by_input[sigma]) {
                const LexTransition& t = m.transitions[i];
                if (!k.count(t.src)) continue;
                image.insert(t.dst);
                per_target[t.dst].push_back(i);
            }
            if (image.empty()) continue;
            size_t next_cfg = intern(std::move(image));
            if (!expanded.count(next_cfg)) work.push_back(next_cfg);

            for (const auto& [dst, group] : per_target) {
                SymbolId min_w = m.transitions[group.front()].weight;
                for (size_t i : group) min_w = std::min(min_w, m.transitions[i].weight);
                size_t kept = 0;
                for (size_t i : group) {
                    const LexTransition& t = m.transitions[i];
                    if (t.weight != min_w) continue;
                    ++kept;
                    n.transitions.push_back(
                        {state_of(cfg, t.src), t.input, t.output, state_of(next_cfg, dst)});
                }
                // the precondition makes minimum weights unique within a group
                if (kept != 1)
                    throw std::logic_error("equal-weight tie survived the precondition check");
            }
        }
    }

    n.normalize_and_validate();
    n.trim();
    return n;
}

} // namespace lexfst
