#include "lexfst/weight_order.hpp"

namespace lexfst {

std::strong_ordering compare_weights(const Word& lhs, const Word& rhs) {
    if (lhs.size() != rhs.size()) throw WeightLengthMismatch(lhs.size(), rhs.size());
    for (size_t i = lhs.size(); i-- > 0;) {
        if (lhs[i] != rhs[i]) return lhs[i] <=> rhs[i];
    }
    return std::strong_ordering::equal;
}

} // namespace lexfst
