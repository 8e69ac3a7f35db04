#include "core/strata.hpp"

#include <numeric>
#include <string>

namespace gzp {

StratumSignature validate_signature(const std::vector<int>& orders) {
    if (orders.empty())
        throw Error(ErrorKind::BadSignature, "empty signature");
    long sum = std::accumulate(orders.begin(), orders.end(), 0L);
    if (sum != -2)
        throw Error(ErrorKind::BadSignature, "orders sum to " + std::to_string(sum) + ", expected -2");

    // zero block = leading run of non-negative entries, then strictly negative
    // finite-pole entries; the last entry always belongs to infinity.
    size_t body = orders.size() - 1;
    size_t split = 0;
    while (split < body && orders[split] >= 0) ++split;
    for (size_t j = split; j < body; ++j)
        if (orders[j] >= 0)
            throw Error(ErrorKind::BadSignature, "zero orders must precede pole orders");

    StratumSignature sig;
    sig.orders = orders;
    sig.m = static_cast<int>(split) - 1;
    sig.n = static_cast<int>(body - split) - 1;

    bool has_positive_zero = false;
    for (size_t i = 0; i < split; ++i)
        if (orders[i] > 0) has_positive_zero = true;
    sig.canonical_ok = has_positive_zero && sig.n >= 0 && sig.order_at_infinity() < 0;
    return sig;
}

}  // namespace gzp
