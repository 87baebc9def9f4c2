#ifndef BINFORM_TEST_SUPPORT_HPP
#define BINFORM_TEST_SUPPORT_HPP

#include <cmath>
#include <random>

#include "binform/arith.hpp"

namespace testing_support {

using namespace binform;

inline std::mt19937_64 & rng()
{
    static std::mt19937_64 g(0x5eed2024ULL);
    return g;
}

inline long uniform(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

/* Random word in S and T^k, |k| <= max_power, stopped before an entry
 * exceeds max_entry. */
inline int_mat random_sl2z(int max_len = 8, long max_power = 3, long max_entry = 20)
{
    int_mat m = int_mat::identity();
    int len = static_cast<int>(uniform(1, max_len));
    for (int i = 0; i < len; ++i) {
        int_mat step = uniform(0, 1) ? gen::S() : gen::T(integer(uniform(-max_power, max_power)));
        int_mat next = m * step;
        if (abs(next.a) > max_entry || abs(next.b) > max_entry || abs(next.c) > max_entry || abs(next.d) > max_entry)
            break;
        m = next;
    }
    return m;
}

/* Random word in translations by Z[i], diag(i,-i) and S. */
inline gauss_mat random_sl2zi(int max_len = 6, long max_shift = 2)
{
    gauss_mat m = gauss_mat::identity();
    int len = static_cast<int>(uniform(1, max_len));
    for (int i = 0; i < len; ++i) {
        switch (uniform(0, 2)) {
        case 0:
            m = m * gen::translation(gaussian_int(uniform(-max_shift, max_shift), uniform(-max_shift, max_shift)));
            break;
        case 1:
            m = m * gen::rotation();
            break;
        default:
            m = m * to_gauss(gen::S());
        }
    }
    return m;
}

inline double rel_err(cplx x, cplx y)
{
    return std::abs(x - y) / std::max(1.0, std::abs(y));
}

} // namespace testing_support

#endif
