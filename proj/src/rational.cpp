#include "dseries/rational.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

namespace dseries {

integer factorial(unsigned n) {
    integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    integer r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

namespace {

// sum_{k=0}^{n} C(n+1,k) B_k = 0
std::vector<rational> bernoulli_upto(unsigned n) {
    std::vector<rational> b(n + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        if (m > 1 && m % 2 == 1) {
            b[m] = 0;
            continue;
        }
        rational acc = 0;
        for (unsigned k = 0; k < m; ++k) acc += rational(binomial(m + 1, k)) * b[k];
        b[m] = -acc / rational(m + 1);
    }
    return b;
}

}  // namespace

const rational& bernoulli_number(unsigned n) {
    static const std::vector<rational> table = bernoulli_upto(64);
    if (n < table.size()) return table[n];

    // Beyond the table: extend once under a lock, entries never move afterwards.
    static std::mutex mu;
    static std::vector<std::unique_ptr<rational>> extra;
    std::lock_guard lock(mu);
    if (extra.size() <= n) {
        auto full = bernoulli_upto(n);
        extra.resize(n + 1);
        for (unsigned i = 0; i <= n; ++i)
            if (!extra[i]) extra[i] = std::make_unique<rational>(full[i]);
    }
    return *extra[n];
}

}  // namespace dseries
