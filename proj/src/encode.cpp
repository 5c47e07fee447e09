#include "lexfst/encode.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace lexfst {

namespace {

// Iterative Tarjan; returns the component index of each state.
std::vector<int> strongly_connected(size_t n, const std::vector<std::vector<StateId>>& succ) {
    std::vector<int> comp(n, -1), low(n, 0), num(n, -1);
    std::vector<StateId> stack;
    std::vector<char> on_stack(n, 0);
    int counter = 0, comps = 0;

    struct Frame {
        StateId v;
        size_t child;
    };
    std::vector<Frame> call;
    for (StateId root = 0; root < n; ++root) {
        if (num[root] != -1) continue;
        num[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        call.push_back({root, 0});
        while (!call.empty()) {
            StateId v = call.back().v;
            if (call.back().child < succ[v].size()) {
                StateId w = succ[v][call.back().child++];
                if (num[w] == -1) {
                    num[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                if (low[v] == num[v]) {
                    for (;;) {
                        StateId w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = comps;
                        if (w == v) break;
                    }
                    ++comps;
                }
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
    }
    return comp;
}

} // namespace

std::vector<SymbolId> EncodedAutomaton::encode_pair(const Word& x, const Word& y) const {
    std::vector<SymbolId> s;
    s.reserve(x.size() + 1 + y.size());
    for (SymbolId a : x) s.push_back(input_map.at(a));
    s.push_back(separator);
    for (SymbolId g : y) s.push_back(output_map.at(g));
    return s;
}

EncodedAutomaton encode_single_tape(const TwoTapeAutomaton& source) {
    TwoTapeAutomaton n = source;
    n.trim();
    for (const TwoTapeTransition& t : n.transitions)
        if (!t.input)
            throw ValidationError("cannot encode: machine has input-ε transitions");

    // Pending output is bounded iff no cycle of the trimmed machine emits
    // output, i.e. every output-emitting transition crosses between strongly
    // connected components.
    size_t max_out = 0;
    {
        std::vector<std::vector<StateId>> succ(n.num_states());
        for (const TwoTapeTransition& t : n.transitions) {
            succ[t.src].push_back(t.dst);
            max_out = std::max(max_out, t.output.size());
        }
        std::vector<int> comp = strongly_connected(n.num_states(), succ);
        for (const TwoTapeTransition& t : n.transitions)
            if (!t.output.empty() && comp[t.src] == comp[t.dst])
                throw ValidationError(
                    "cannot encode: a reachable cycle emits output, so pending output is "
                    "unbounded and the encoded language need not be regular");
    }
    // a path crosses each component boundary at most once
    const size_t buffer_bound = n.num_states() * max_out;

    EncodedAutomaton enc;
    bool collide = false;
    for (const std::string& tok : n.inputs.tokens())
        if (n.outputs.find(tok)) collide = true;
    for (const std::string& tok : n.inputs.tokens())
        enc.input_map.push_back(enc.nfa.alphabet.add(collide ? "in:" + tok : tok));
    enc.separator = enc.nfa.alphabet.add_reserved("#");
    for (const std::string& tok : n.outputs.tokens())
        enc.output_map.push_back(enc.nfa.alphabet.add(collide ? "out:" + tok : tok));

    auto by_src = transitions_by_source(n);

    // main phase: (source state, pending output) pairs
    std::map<std::pair<StateId, Word>, StateId> ids;
    std::deque<std::pair<StateId, Word>> work;
    StateId next_id = 0;
    auto intern = [&](StateId q, Word buf) {
        auto [it, fresh] = ids.try_emplace({q, std::move(buf)}, next_id);
        if (fresh) {
            ++next_id;
            work.push_back(it->first);
        }
        return it->second;
    };
    // replay phase: states keyed by the output word still to be read
    std::map<Word, StateId> tails;
    auto tail = [&](const Word& w) {
        StateId out = 0;
        // build the chain back to front so each link exists before use
        for (size_t have = 0; have <= w.size(); ++have) {
            Word suffix(w.end() - have, w.end());
            auto [it, fresh] = tails.try_emplace(suffix, next_id);
            if (fresh) {
                ++next_id;
                if (have == 0) enc.nfa.final.insert(it->second);
                else enc.nfa.transitions.push_back(
                         {it->second, enc.output_map[suffix[0]],
                          tails[Word(suffix.begin() + 1, suffix.end())]});
            }
            out = it->second;
        }
        return out;
    };

    for (StateId q : n.initial) enc.nfa.initial.insert(intern(q, {}));
    while (!work.empty()) {
        auto [q, buf] = work.front();
        work.pop_front();
        StateId here = ids.at({q, buf});
        if (buf.size() > buffer_bound)
            throw std::logic_error("single-tape encoding exceeded its pending-output bound");
        for (size_t i : by_src[q]) {
            const TwoTapeTransition& t = n.transitions[i];
            Word next_buf = buf;
            next_buf.insert(next_buf.end(), t.output.begin(), t.output.end());
            enc.nfa.transitions.push_back(
                {here, enc.input_map[*t.input], intern(t.dst, std::move(next_buf))});
        }
        if (n.is_final(q))
            enc.nfa.transitions.push_back({here, enc.separator, tail(buf)});
    }
    enc.nfa.num_states = next_id;
    std::sort(enc.nfa.transitions.begin(), enc.nfa.transitions.end());
    enc.nfa.transitions.erase(
        std::unique(enc.nfa.transitions.begin(), enc.nfa.transitions.end()),
        enc.nfa.transitions.end());
    return enc;
}

} // namespace lexfst
