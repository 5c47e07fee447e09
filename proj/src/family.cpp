#include "lexfst/family.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "lexfst/analysis.hpp"
#include "lexfst/encode.hpp"
#include "lexfst/erase.hpp"

namespace lexfst {

LexTransducer gen_family(int n) {
    if (n < 3) throw std::invalid_argument("family parameter must be at least 3");

    LexTransducer m;
    for (int k = 1; k <= n; ++k) m.weights.add("w" + std::to_string(k));
    SymbolId zero = m.inputs.add("0");
    SymbolId one = m.inputs.add("1");
    SymbolId two = m.inputs.add("2");
    for (int k = 1; k <= n; ++k) m.outputs.add("y" + std::to_string(k));

    m.state_names = default_state_names(size_t(n) + 2);
    m.initial = {0};
    m.final = {StateId(n + 1)};

    SymbolId w1 = 0;
    m.transitions.push_back({0, zero, w1, {}, 0});
    m.transitions.push_back({0, one, w1, {}, 0});
    m.transitions.push_back({0, one, w1, {}, 1});
    for (StateId i = 1; i + 1 <= StateId(n); ++i) {
        m.transitions.push_back({i, zero, w1, {}, i + 1});
        m.transitions.push_back({i, one, w1, {}, i + 1});
    }
    for (StateId k = 1; k <= StateId(n); ++k)
        m.transitions.push_back({k, two, SymbolId(n - k), {SymbolId(k - 1)}, StateId(n + 1)});

    m.normalize_and_validate();
    return m;
}

std::vector<BenchRow> bench_family(int n_min, int n_max) {
    if (n_min < 3) throw std::invalid_argument("family parameter must be at least 3");
    if (n_min > n_max) throw std::invalid_argument("empty range: n_min exceeds n_max");

    using Clock = std::chrono::steady_clock;
    auto ms_since = [](Clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    };

    std::vector<BenchRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        LexTransducer m = gen_family(n);
        StrongFunctionalReport pre = check_strongly_functional(m);
        if (!pre.holds)
            throw std::logic_error("generated machine is not strongly functional: " + pre.reason);

        BenchRow row;
        row.n = n;
        row.states_lex = m.num_states();

        auto t0 = Clock::now();
        TwoTapeAutomaton erased = erase_strong(m);
        row.erase_ms = ms_since(t0);
        row.states_erased = erased.num_states();

        t0 = Clock::now();
        row.min_dfa_states = minimal_dfa_size(encode_single_tape(erased).nfa);
        row.mindfa_ms = ms_since(t0);
        rows.push_back(row);
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "n,states_lex,states_erased,min_dfa_states,erase_ms,mindfa_ms\n";
    out << std::fixed << std::setprecision(3);
    for (const BenchRow& r : rows)
        out << r.n << ',' << r.states_lex << ',' << r.states_erased << ',' << r.min_dfa_states
            << ',' << r.erase_ms << ',' << r.mindfa_ms << '\n';
    return out.str();
}

} // namespace lexfst
