#include "subcount/bigint.hpp"

#include <algorithm>

namespace subcount {

BigInt binomial(std::uint64_t n, unsigned k) {
    if (k > n) return 0;
    if (n - k < k) k = static_cast<unsigned>(n - k);
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

}  // namespace subcount
