#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "binform/arith.hpp"
#include "support.hpp"

using namespace binform;
using testing_support::rng;
using testing_support::uniform;

namespace {

bool contains(std::vector<cplx> const & roots, cplx z, double tol = 1e-12)
{
    return std::any_of(roots.begin(), roots.end(), [&](cplx r) { return std::abs(r - z) <= tol; });
}

/* Descending coefficients of lead * prod (X - r). */
std::vector<cplx> expand(std::vector<cplx> const & roots, cplx lead)
{
    std::vector<cplx> c = {lead};
    for (cplx r : roots) {
        std::vector<cplx> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i] += c[i];
            next[i + 1] -= r * c[i];
        }
        c = next;
    }
    return c;
}

} // namespace

TEST_CASE("rounding ties go toward zero")
{
    CHECK(round_half_toward_zero(rational(1, 2)) == 0);
    CHECK(round_half_toward_zero(rational(-1, 2)) == 0);
    CHECK(round_half_toward_zero(rational(3, 2)) == 1);
    CHECK(round_half_toward_zero(rational(-3, 2)) == -1);
    CHECK(round_half_toward_zero(rational(7, 4)) == 2);
    CHECK(round_half_toward_zero(rational(-7, 4)) == -2);
    CHECK(round_half_toward_zero(2.5) == 2.0);
    CHECK(round_half_toward_zero(-2.5) == -2.0);
    CHECK(round_half_toward_zero(2.6) == 3.0);
    CHECK(make_rational(6, -4) == rational(-3, 2));
    CHECK_THROWS_AS(make_rational(1, 0), degenerate_input);
}

TEST_CASE("gaussian integers")
{
    gaussian_int x(3, -2), y(-1, 4);
    CHECK(x * y == gaussian_int(5, 14));
    CHECK(conj(conj(x)) == x);
    CHECK(norm(gaussian_int(0, 0)) == 0);
    CHECK(to_string(gaussian_int(0, -1)) == "-i");
    CHECK(to_string(gaussian_int(1, -1)) == "1-i");
    CHECK(to_string(gaussian_int(-2, 3)) == "-2+3i");

    // norm is multiplicative, exhaustively on a box
    for (long a = -10; a <= 10; ++a)
        for (long b = -10; b <= 10; ++b) {
            gaussian_int u(a, b);
            CHECK((norm(u) == 0) == u.is_zero());
            for (long c = -10; c <= 10; c += 3)
                for (long d = -10; d <= 10; d += 3) {
                    gaussian_int v(c, d);
                    REQUIRE(norm(u * v) == norm(u) * norm(v));
                }
        }
}

TEST_CASE("gaussian rational text round trip")
{
    for (std::string s : {"3", "-1/2", "i", "-2i", "1-i", "1/2+3/4i", "0", "-7/3-5/2i", "5i"}) {
        CAPTURE(s);
        CHECK(to_string(parse_gaussian_rational(s)) == s);
    }
    CHECK(parse_gaussian_rational("+3") == gaussian_rational(3));
    CHECK(parse_gaussian_rational("2i+1") == gaussian_rational(1, 2));
    CHECK(parse_gaussian_rational("4/6") == gaussian_rational(rational(2, 3)));
    for (std::string bad : {"", "x", "1//2", "1+", "i i", "1/0"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_gaussian_rational(bad), parse_error);
    }
    CHECK_THROWS_AS(gaussian_rational(1) / gaussian_rational(0), degenerate_input);
    CHECK(gaussian_rational(1) / gaussian_rational(0, 1) == gaussian_rational(0, -1));
}

TEST_CASE("matrix group identities")
{
    int_mat S = gen::S(), T = gen::T();
    CHECK(S * S == int_mat{-1, 0, 0, -1});
    CHECK(is_projective_identity(S * S));
    CHECK(T * mat_inv(T) == int_mat::identity());
    int_mat st = S * T;
    CHECK(is_projective_identity(st * st * st));
    CHECK_THROWS_AS(mat_inv(int_mat{2, 0, 0, 1}), domain_error);

    for (int k = 0; k < 200; ++k) {
        int_mat a = testing_support::random_sl2z(), b = testing_support::random_sl2z();
        REQUIRE(det(a * b) == 1);
        REQUIRE(a * mat_inv(a) == int_mat::identity());
        gauss_mat g = testing_support::random_sl2zi(), h = testing_support::random_sl2zi();
        REQUIRE(det(g * h) == gaussian_int(1));
        REQUIRE(g * mat_inv(g) == gauss_mat::identity());
    }
}

TEST_CASE("roots of small polynomials")
{
    std::vector<cplx> r = find_roots(poly::from_descending(std::vector<cplx>{1, 0, 1}));
    REQUIRE(r.size() == 2);
    CHECK(contains(r, {0, 1}));
    CHECK(contains(r, {0, -1}));

    r = find_roots(poly::from_descending(std::vector<cplx>{1, 0, -1, 0}));
    REQUIRE(r.size() == 3);
    for (double x : {-1.0, 0.0, 1.0})
        CHECK(contains(r, x));

    CHECK_THROWS_AS(find_roots(poly(std::vector<cplx>{3})), degenerate_input);
}

TEST_CASE("refactoring reproduces the quintic coefficients")
{
    std::vector<cplx> c = {4, 0, 4, 0, -3, 0};
    std::vector<cplx> r = find_roots(poly::from_descending(c));
    REQUIRE(r.size() == 5);
    std::vector<cplx> back = expand(r, 4.0);
    for (std::size_t i = 0; i < c.size(); ++i)
        CHECK(std::abs(back[i] - c[i]) <= 1e-10 * 4);
}

TEST_CASE("random well separated real polynomials refactor to 1e-9")
{
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(uniform(1, 12));
        std::vector<cplx> roots;
        // well separated: distinct points of a coarse grid
        while (static_cast<int>(roots.size()) < n) {
            cplx z(uniform(-6, 6) * 0.5, 0.0);
            if (n - static_cast<int>(roots.size()) >= 2 && uniform(0, 1))
                z.imag(uniform(1, 6) * 0.5);
            bool clash = std::any_of(roots.begin(), roots.end(), [&](cplx w) { return std::abs(w - z) < 0.4; });
            if (clash)
                continue;
            roots.push_back(z);
            if (z.imag() != 0)
                roots.push_back(std::conj(z));
        }
        cplx lead = static_cast<double>(uniform(1, 5));
        std::vector<cplx> c = expand(roots, lead);
        for (cplx & x : c)
            x = x.real(); // exact real coefficients
        std::vector<cplx> found = find_roots(poly::from_descending(c));
        REQUIRE(found.size() == c.size() - 1);
        std::vector<cplx> back = expand(found, lead);
        double scale = 0;
        for (cplx x : c)
            scale = std::max(scale, std::abs(x));
        for (std::size_t i = 0; i < c.size(); ++i)
            REQUIRE(std::abs(back[i] - c[i]) <= 1e-9 * scale);
        // conjugate closed
        for (cplx z : found)
            REQUIRE(contains(found, std::conj(z), 1e-9 * std::max(1.0, std::abs(z))));
    }
}

TEST_CASE("clustering and square-free decomposition")
{
    std::vector<cplx> r = {1.0, 1.0 + 1e-10, 2.0};
    auto cl = cluster_roots(r);
    REQUIRE(cl.size() == 2);
    CHECK(cl[0].multiplicity + cl[1].multiplicity == 3);

    // (X - 1)^3 (X + 2)
    std::vector<rational> f = {-2, 5, -3, -1, 1};
    auto sq = squarefree_decomposition(f);
    REQUIRE(sq.size() == 2);
    std::sort(sq.begin(), sq.end(), [](auto const & x, auto const & y) { return x.multiplicity < y.multiplicity; });
    CHECK(sq[0].multiplicity == 1);
    CHECK(sq[0].coeffs == std::vector<rational>{2, 1});
    CHECK(sq[1].multiplicity == 3);
    CHECK(sq[1].coeffs == std::vector<rational>{-1, 1});

    // (X - i)^2 over Q(i): X^2 - 2iX - 1
    std::vector<gaussian_rational> g = {gaussian_rational(-1), gaussian_rational(0, -2), gaussian_rational(1)};
    auto gq = squarefree_decomposition(g);
    REQUIRE(gq.size() == 1);
    CHECK(gq[0].multiplicity == 2);
    CHECK(gq[0].coeffs[0] == gaussian_rational(0, -1));
}
