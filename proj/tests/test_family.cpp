// The shift-register family and its benchmark pipeline: structure, selection
// semantics, the exponential lower bound that motivates it, and the CSV.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "lexfst/analysis.hpp"
#include "lexfst/encode.hpp"
#include "lexfst/erase.hpp"
#include "lexfst/family.hpp"
#include "lexfst/oracle.hpp"

using namespace lexfst;

namespace {

/// The register cells that are active after reading bit string x: cell k
/// holds the k-th bit from the end, for k up to the register length.
std::set<int> active_cells(const Word& x, int n, SymbolId one) {
    std::set<int> cells;
    for (int k = 1; k <= n && size_t(k) <= x.size(); ++k)
        if (x[x.size() - size_t(k)] == one) cells.insert(k);
    return cells;
}

} // namespace

TEST_CASE("family members have the documented shape") {
    for (int n : {3, 5, 8}) {
        CAPTURE(n);
        LexTransducer m = gen_family(n);
        CHECK(m.num_states() == size_t(n) + 2);
        CHECK(m.initial == std::set<StateId>{0});
        CHECK(m.final == std::set<StateId>{StateId(n + 1)});
        CHECK(m.weights.size() == size_t(n));
        CHECK(m.inputs.tokens() == std::vector<std::string>{"0", "1", "2"});
        CHECK(m.outputs.size() == size_t(n));
        CHECK(m.weights.token(0) == "w1");
        CHECK(m.outputs.token(SymbolId(n - 1)) == "y" + std::to_string(n));
        // 3 start loops/entries + 2(n-1) shifts + n exits
        CHECK(m.transitions.size() == 3 + 2 * size_t(n - 1) + size_t(n));
    }
    CHECK_THROWS_AS(gen_family(2), std::invalid_argument);
    CHECK_THROWS_AS(gen_family(0), std::invalid_argument);
    CHECK_THROWS_AS(gen_family(-4), std::invalid_argument);
}

TEST_CASE("every family member is strongly functional") {
    for (int n = 3; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(check_strongly_functional(gen_family(n)).holds);
    }
}

TEST_CASE("exit weights descend so the deepest active cell is selected") {
    LexTransducer m = gen_family(3);
    SymbolId one = m.inputs.require("1");
    SymbolId two = m.inputs.require("2");

    RunResult r = run(m, {one, one, two});
    CHECK(r.accepted);
    CHECK(r.selected == std::set<Word>{{m.outputs.require("y2")}});
    SymbolId w1 = m.weights.require("w1");
    CHECK(r.min_weight == Word{w1, w1, m.weights.require("w2")});

    // without any active cell the exit row is unreachable
    SymbolId zero = m.inputs.require("0");
    CHECK_FALSE(run(m, {zero, zero, zero, two}).accepted);
    // and the probe symbol is mandatory: bits alone never accept
    CHECK_FALSE(run(m, {one, one}).accepted);
    CHECK_FALSE(run(m, {}).accepted);
}

TEST_CASE("selection computes the maximum of the active set") {
    for (int n : {3, 4}) {
        CAPTURE(n);
        LexTransducer m = gen_family(n);
        SymbolId one = m.inputs.require("1");
        SymbolId two = m.inputs.require("2");
        for_each_word(2, size_t(n) + 2, [&](const Word& bits) {
            Word input = bits;  // symbols 0/1 are the bits themselves
            input.push_back(two);
            RunResult r = run(m, input);
            std::set<int> cells = active_cells(bits, n, one);
            if (cells.empty()) {
                CHECK_FALSE(r.accepted);
            } else {
                bool accepted = r.accepted;
                CHECK(accepted);
                int deepest = *cells.rbegin();
                CHECK(r.selected == std::set<Word>{{SymbolId(deepest - 1)}});
            }
            return true;
        });
    }
}

TEST_CASE("the minimal-weight witness is always unique") {
    LexTransducer m = gen_family(4);
    for_each_word(m.inputs.size(), 6, [&](const Word& c) {
        auto ws = enumerate_accepting(m, c);
        if (ws.empty()) return true;
        Word min = ws[0].weight;
        for (const auto& w : ws)
            if (weight_less(w.weight, min)) min = w.weight;
        size_t at_min = 0;
        for (const auto& w : ws)
            if (w.weight == min) ++at_min;
        CHECK(at_min == 1);
        return true;
    });
}

TEST_CASE("the pruned evaluator matches the reference on a family member") {
    CHECK(oracle_equivalence(gen_family(3), 5).equivalent);
}

TEST_CASE("erasing the family blows up to the full register powerset") {
    for (int n = 3; n <= 6; ++n) {
        CAPTURE(n);
        TwoTapeAutomaton erased = erase_strong(gen_family(n));
        size_t classes = minimal_dfa_size(encode_single_tape(erased).nfa);
        // one residual class per register configuration, plus the n pending
        // suffixes on each side of the separator and the accepting class
        CHECK(classes == (size_t(1) << n) + 2 * size_t(n) + 1);
        CHECK(classes >= (size_t(1) << n));
    }
}

TEST_CASE("the benchmark reports the pipeline per family member") {
    auto rows = bench_family(3, 5);
    REQUIRE(rows.size() == 3);
    for (size_t i = 0; i < rows.size(); ++i) {
        const BenchRow& r = rows[i];
        int n = 3 + int(i);
        CHECK(r.n == n);
        CHECK(r.states_lex == size_t(n) + 2);
        CHECK(r.states_erased >= (size_t(1) << n));
        CHECK(r.min_dfa_states == (size_t(1) << n) + 2 * size_t(n) + 1);
        CHECK(r.erase_ms >= 0.0);
        CHECK(r.mindfa_ms >= 0.0);
        if (i > 0) CHECK(r.min_dfa_states > rows[i - 1].min_dfa_states);
    }
    CHECK_THROWS_AS(bench_family(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(bench_family(5, 4), std::invalid_argument);
}

TEST_CASE("the benchmark serializes to one CSV row per member") {
    auto rows = bench_family(3, 4);
    std::string csv = bench_csv(rows);
    CHECK(csv.rfind("n,states_lex,states_erased,min_dfa_states,erase_ms,mindfa_ms\n", 0) == 0);
    size_t lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == rows.size() + 1);
    CHECK(csv.find("\n3,5,") != std::string::npos);
    CHECK(csv.find("\n4,6,") != std::string::npos);
}
