#include "lexfst/prob.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace lexfst {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (!(0 <= lo && lo < hi && hi <= 1))
        throw ValidationError("interval endpoints must satisfy 0 <= lo < hi <= 1");
}

Interval interval_mul(const Interval& x, const Interval& y) {
    Rational span = x.hi - x.lo;
    return Interval(x.lo + span * y.lo, x.lo + span * y.hi);
}

Rational interval_norm(const Interval& x) { return x.hi - x.lo; }

std::set<std::vector<uint32_t>> prefix_free_reduce(const std::set<std::vector<uint32_t>>& words) {
    std::set<std::vector<uint32_t>> out;
    for (const auto& w : words) {
        bool has_prefix = false;
        // only proper prefixes disqualify, so stop before |w|
        for (size_t len = 0; len < w.size() && !has_prefix; ++len)
            has_prefix = out.count(std::vector<uint32_t>(w.begin(), w.begin() + len)) != 0;
        if (!has_prefix) out.insert(w);
    }
    // std::set iterates in lexicographic order, so every prefix of a word is
    // visited before the word itself; one pass suffices.
    return out;
}

Interval ProbAutomaton::interval(uint32_t k) const {
    if (k < 1 || k > num_intervals())
        throw ValidationError("interval index " + std::to_string(k) + " out of range");
    return Interval(cuts[k - 1], cuts[k]);
}

void ProbAutomaton::normalize_and_validate() {
    std::sort(transitions.begin(), transitions.end());
    transitions.erase(std::unique(transitions.begin(), transitions.end()), transitions.end());

    if (cuts.size() < 2) throw ValidationError("need at least one interval (two cut points)");
    if (cuts.front() != 0 || cuts.back() != 1)
        throw ValidationError("cut points must start at 0 and end at 1");
    for (size_t i = 1; i < cuts.size(); ++i)
        if (!(cuts[i - 1] < cuts[i])) throw ValidationError("cut points must be strictly ascending");

    if (initial >= num_states()) throw ValidationError("initial state out of range");
    for (StateId q : final)
        if (q >= num_states()) throw ValidationError("final state out of range");

    std::set<std::pair<StateId, uint32_t>> seen;
    for (const ProbTransition& t : transitions) {
        if (t.src >= num_states() || t.dst >= num_states())
            throw ValidationError("transition endpoint out of range");
        if (t.k < 1 || t.k > num_intervals())
            throw ValidationError("interval index out of range on a transition");
        for (SymbolId g : t.output)
            if (!gamma.contains(g)) throw ValidationError("output symbol not in alphabet");
        for (SymbolId g : t.output2)
            if (!delta.contains(g)) throw ValidationError("second-tape symbol not in alphabet");
        if (delta.empty() && !t.output2.empty())
            throw ValidationError("second-tape output without a declared second alphabet");
        if (!seen.insert({t.src, t.k}).second)
            throw ValidationError("two transitions leave state " + state_names[t.src] +
                                  " on interval " + std::to_string(t.k) +
                                  " (transitions must be a function of state and interval)");
    }
}

namespace {

// A node of the product graph: machine state plus progress into the target
// word(s). Paths are in bijection with interval-index words because at most
// one transition leaves each (state, k); the DP below pushes probability
// mass through this graph one interval symbol at a time.
struct Node {
    StateId q;
    size_t pos_c;
    size_t pos_d;
    friend auto operator<=>(const Node&, const Node&) = default;
};

bool word_matches_at(const Word& target, size_t pos, const Word& piece) {
    if (pos + piece.size() > target.size()) return false;
    return std::equal(piece.begin(), piece.end(), target.begin() + pos);
}

// Brackets for P(c) (d == nullptr) and P(c,d) (both tapes must match).
ProbBracket bracket_impl(const ProbAutomaton& p, const Word& c, const Word* d, size_t depth) {
    for (SymbolId g : c)
        if (!p.gamma.contains(g)) throw ValidationError("query symbol not in output alphabet");
    if (d) {
        if (!p.has_second_tape())
            throw ValidationError("machine has no second tape; cannot take a joint probability");
        for (SymbolId g : *d)
            if (!p.delta.contains(g)) throw ValidationError("query symbol not in second alphabet");
    }

    auto by_src = [&] {
        std::vector<std::vector<size_t>> v(p.num_states());
        for (size_t i = 0; i < p.transitions.size(); ++i) v[p.transitions[i].src].push_back(i);
        return v;
    }();

    size_t dlen = d ? d->size() : 0;
    auto successors = [&](const Node& n) {
        std::vector<std::pair<Node, uint32_t>> out;  // (target node, interval index)
        for (size_t i : by_src[n.q]) {
            const ProbTransition& t = p.transitions[i];
            if (!word_matches_at(c, n.pos_c, t.output)) continue;
            if (d && !word_matches_at(*d, n.pos_d, t.output2)) continue;
            out.push_back({{t.dst, n.pos_c + t.output.size(),
                            d ? n.pos_d + t.output2.size() : 0},
                           t.k});
        }
        return out;
    };
    auto is_accepting = [&](const Node& n) {
        return n.pos_c == c.size() && n.pos_d == dlen && p.final.count(n.q) != 0;
    };

    // Backward reachability over the (finite) node graph: mass sitting on a
    // node from which acceptance is impossible can never contribute and is
    // dropped from the upper bound too.
    std::set<Node> can_accept;
    {
        std::map<Node, std::vector<Node>> preds;
        std::deque<Node> queue;
        for (StateId q = 0; q < p.num_states(); ++q)
            for (size_t pc = 0; pc <= c.size(); ++pc)
                for (size_t pd = 0; pd <= dlen; ++pd) {
                    Node n{q, pc, pd};
                    for (auto& [m, k] : successors(n)) preds[m].push_back(n);
                    if (is_accepting(n)) {
                        can_accept.insert(n);
                        queue.push_back(n);
                    }
                }
        while (!queue.empty()) {
            Node n = queue.front();
            queue.pop_front();
            auto it = preds.find(n);
            if (it == preds.end()) continue;
            for (const Node& m : it->second)
                if (can_accept.insert(m).second) queue.push_back(m);
        }
    }

    // Each frontier entry carries the total norm of the composed intervals
    // of all weight words reaching that node (norms multiply along a path,
    // and distinct weight words occupy disjoint subintervals, so they add).
    std::map<Node, Rational> frontier;
    {
        Node start{p.initial, 0, 0};
        if (can_accept.count(start)) frontier[start] = 1;
    }

    ProbBracket result;
    result.lower = 0;
    result.depth = depth;
    for (size_t step = 0;; ++step) {
        // harvest: an accepted weight word is minimal by construction (its
        // mass would have been removed at a shorter length otherwise), so
        // the prefix-free sum just accumulates
        for (auto it = frontier.begin(); it != frontier.end();) {
            if (is_accepting(it->first)) {
                result.lower += it->second;
                it = frontier.erase(it);
            } else {
                ++it;
            }
        }
        if (step == depth || frontier.empty()) break;
        std::map<Node, Rational> next;
        for (const auto& [node, mass] : frontier) {
            for (auto& [succ, k] : successors(node)) {
                if (!can_accept.count(succ)) continue;
                next[succ] += mass * interval_norm(p.interval(k));
            }
        }
        frontier = std::move(next);
    }

    result.upper = result.lower;
    for (const auto& [node, mass] : frontier) result.upper += mass;
    return result;
}

} // namespace

ProbBracket prob_bracket(const ProbAutomaton& p, const Word& c, size_t depth) {
    return bracket_impl(p, c, nullptr, depth);
}

ProbBracket prob_bracket(const ProbAutomaton& p, const Word& c, const Word& d, size_t depth) {
    return bracket_impl(p, c, &d, depth);
}

ProbBracket cond_prob(const ProbAutomaton& p, const Word& c, const Word& d, size_t depth) {
    ProbBracket pc = prob_bracket(p, c, depth);
    ProbBracket pcd = prob_bracket(p, c, d, depth);
    if (pc.upper == 0) throw ValidationError("conditioning on null event");

    ProbBracket out;
    out.depth = depth;
    if (pcd.upper == 0) {
        // the joint event is impossible at any depth, so the quotient is 0
        out.lower = 0;
        out.upper = 0;
        return out;
    }
    out.lower = pcd.lower / pc.upper;
    out.upper = (pc.lower > 0) ? std::min(Rational(1), Rational(pcd.upper / pc.lower))
                               : Rational(1);
    return out;
}

} // namespace lexfst
