#ifndef LEXFST_FAMILY_HPP
#define LEXFST_FAMILY_HPP

#include <string>
#include <vector>

#include "lexfst/fst.hpp"

namespace lexfst {

/// Shift-register family exhibiting the exponential cost of weight erasure.
///
/// States q0..q_{n+1} over inputs {0,1,2}. q0 loops on 0 and 1 and can enter
/// the register at q1 on a 1; q_i shifts to q_{i+1} on either bit. So q_k is
/// active after reading x iff the k-th symbol from the end of x (within the
/// last n) is a 1. Exit edges q_k -> q_{n+1} consume 2, emit y_k, and carry
/// weight w_{n+1-k}: descending in k, so minimum-weight selection answers
/// with the largest active index. The answers to x·0^j·2 for j = 0..n-1
/// determine the whole active set, which makes every one of the 2^n register
/// configurations pairwise distinguishable after erasure.
LexTransducer gen_family(int n);

/// One measured pipeline run: generate, erase weights, encode, minimize.
struct BenchRow {
    int n = 0;
    size_t states_lex = 0;
    size_t states_erased = 0;
    size_t min_dfa_states = 0;
    double erase_ms = 0.0;
    double mindfa_ms = 0.0;

    friend bool operator==(const BenchRow&, const BenchRow&) = default;
};

/// Runs the pipeline for each n in [n_min, n_max]; requires 3 <= n_min <= n_max.
std::vector<BenchRow> bench_family(int n_min, int n_max);

/// CSV with header n,states_lex,states_erased,min_dfa_states,erase_ms,mindfa_ms.
std::string bench_csv(const std::vector<BenchRow>& rows);

} // namespace lexfst

#endif
