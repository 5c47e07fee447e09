#ifndef LEXFST_WEIGHT_ORDER_HPP
#define LEXFST_WEIGHT_ORDER_HPP

#include <compare>
#include <stdexcept>

#include "lexfst/alphabet.hpp"

namespace lexfst {

struct WeightLengthMismatch : std::logic_error {
    WeightLengthMismatch(size_t lhs, size_t rhs)
        : std::logic_error("weight words of different lengths compared (" +
                           std::to_string(lhs) + " vs " + std::to_string(rhs) + ")") {}
};

/// Suffix-dominant order on equal-length weight words: the last symbols are
/// compared by rank first; on a tie the prefixes are compared recursively.
/// Weights are appended as a run proceeds, so the most recent symbol wins.
/// Comparing words of different lengths is a logic error, never a semantics
/// question: evaluation only ever compares weights of equal-length runs.
std::strong_ordering compare_weights(const Word& lhs, const Word& rhs);

inline bool weight_less(const Word& lhs, const Word& rhs) {
    return compare_weights(lhs, rhs) == std::strong_ordering::less;
}

} // namespace lexfst

#endif
