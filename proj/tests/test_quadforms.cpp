#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>
#include <tuple>

#include "binform/quadforms.hpp"
#include "support.hpp"

using namespace binform;
using testing_support::uniform;

namespace {

quad_form qf(long a, long b, long c) { return {rational(a), rational(b), rational(c)}; }

/* Naive oracle: every (a, b, c) with |b| <= a <= c and the given
 * discriminant, boundary duplicates resolved to b >= 0. */
std::set<std::tuple<long, long, long>> brute_reduced(long disc, bool primitive_only)
{
    std::set<std::tuple<long, long, long>> out;
    long D = -disc;
    for (long a = 1; a * a <= D; ++a)
        for (long b = -a; b <= a; ++b)
            for (long c = a; 4 * a * c - b * b <= D; ++c) {
                if (b * b - 4 * a * c != disc)
                    continue;
                if (b < 0 && (-b == a || a == c))
                    continue;
                if (primitive_only && std::gcd(std::gcd(a, std::abs(b)), c) != 1)
                    continue;
                out.insert({a, b, c});
            }
    return out;
}

quad_form random_definite()
{
    for (;;) {
        long a = uniform(1, 40), b = uniform(-40, 40), c = uniform(1, 40);
        if (b * b - 4 * a * c < 0)
            return qf(a, b, c);
    }
}

} // namespace

TEST_CASE("action examples")
{
    quad_form q = qf(3, -5, 7);
    CHECK(act(gen::S(), q) == qf(7, 5, 3));
    CHECK(act(gen::T(), q) == qf(3, 1, 5));
    CHECK(act(int_mat::identity(), q) == q);

    for (int k = 0; k < 200; ++k) {
        quad_form r = random_definite();
        int_mat m = testing_support::random_sl2z();
        quad_form s = act(m, r);
        REQUIRE(s.discriminant() == r.discriminant());
        REQUIRE(s.is_positive_definite());
    }
}

TEST_CASE("zero map")
{
    h2_point i = zero_map(qf(1, 0, 1));
    CHECK(i.x == 0.0);
    CHECK(i.y == 1.0);

    h2_point p = zero_map(qf(2, 1, 3));
    CHECK(p.x == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(p.y == doctest::Approx(std::sqrt(23.0) / 4).epsilon(1e-15));

    // bijectivity witness [1, -2x, x^2 + y^2]
    rational x(3, 7), y(5, 2);
    h2_point w = zero_map(quad_form{1, -2 * x, x * x + y * y});
    CHECK(w.x == doctest::Approx(x.get_d()).epsilon(1e-15));
    CHECK(w.y == doctest::Approx(y.get_d()).epsilon(1e-15));

    CHECK_THROWS_AS(zero_map(qf(1, 0, -1)), not_positive_definite);
    CHECK_THROWS_AS(zero_map(qf(-1, 0, -1)), not_positive_definite);
}

TEST_CASE("reducedness")
{
    CHECK(is_reduced(qf(2, 1, 3)).reduced);
    CHECK_FALSE(is_reduced(qf(2, 1, 3)).boundary);
    CHECK(is_reduced(qf(1, 0, 1)).reduced);
    CHECK(is_reduced(qf(1, 0, 1)).boundary);
    CHECK_FALSE(is_reduced(qf(6, 1, 1)).reduced);
    CHECK_THROWS_AS(is_reduced(qf(1, 3, 1)), not_positive_definite);
}

TEST_CASE("reduction examples")
{
    quad_reduction a = reduce(qf(1, 1, 6));
    CHECK(a.form == qf(1, 1, 6));
    CHECK(a.transform == int_mat::identity());

    quad_reduction b = reduce(qf(6, 1, 1));
    CHECK(b.form == qf(1, 1, 6));
    CHECK(act(b.transform, qf(6, 1, 1)) == b.form);
    CHECK(det(b.transform) == 1);

    // brute force: some M with entries <= 3 reaches [1, 1, 6]
    bool hit = false;
    for (long p = -3; p <= 3 && !hit; ++p)
        for (long q = -3; q <= 3 && !hit; ++q)
            for (long r = -3; r <= 3 && !hit; ++r)
                for (long s = -3; s <= 3 && !hit; ++s)
                    if (p * s - q * r == 1 && act(int_mat{p, q, r, s}, qf(6, 1, 1)) == qf(1, 1, 6))
                        hit = true;
    CHECK(hit);

    quad_reduction c = reduce(qf(1, 100, 2501));
    auto only = enumerate_reduced(integer(-4));
    REQUIRE(only.count == 1);
    CHECK(c.form == only.forms[0]);
    CHECK(c.form == qf(1, 0, 1));
    CHECK(act(c.transform, qf(1, 100, 2501)) == c.form);

    CHECK_THROWS_AS(reduce(qf(1, 0, -1)), not_positive_definite);
}

TEST_CASE("boundary forms reduce to b >= 0")
{
    CHECK(reduce(qf(2, -2, 3)).form == qf(2, 2, 3));
    CHECK(reduce(qf(3, -1, 3)).form == qf(3, 1, 3));
    CHECK(reduce(qf(2, 2, 3)).form == qf(2, 2, 3));
}

TEST_CASE("rational and huge coefficients")
{
    quad_form q{rational(1, 2), rational(1, 3), rational(5, 7)};
    quad_reduction r = reduce(q);
    CHECK(is_reduced(r.form).reduced);
    CHECK(act(r.transform, q) == r.form);
    CHECK(r.form.discriminant() == q.discriminant());

    int_mat m = int_mat::identity();
    for (int k = 0; k < 60; ++k)
        m = m * gen::T(integer(k % 5 + 1)) * gen::S();
    quad_form big = act(m, qf(2, 1, 3));
    quad_reduction rb = reduce(big);
    CHECK(rb.form == qf(2, 1, 3));
    CHECK(act(rb.transform, big) == rb.form);
}

TEST_CASE("heights")
{
    CHECK(height(qf(2, 1, 3)) == 3);
    CHECK(class_height(qf(6, 1, 1)) == 6);
    CHECK(class_height(qf(1, 0, 1)) == 1);

    for (long disc : {-23L, -47L, -71L, -104L}) {
        for (auto const & r : enumerate_reduced(integer(disc)).forms)
            for (int k = 0; k < 100; ++k)
                REQUIRE(height(act(testing_support::random_sl2z(), r)) >= class_height(r));
    }
}

TEST_CASE("equivariance of the zero map")
{
    for (int k = 0; k < 200; ++k) {
        quad_form q = random_definite();
        int_mat m = testing_support::random_sl2z();
        h2_point lhs = zero_map(act(m, q));
        h2_point rhs = mobius_h2(mat_inv(m), zero_map(q));
        REQUIRE(testing_support::rel_err(lhs.as_complex(), rhs.as_complex()) <= 1e-12);
    }
}

TEST_CASE("enumeration examples")
{
    auto l23 = enumerate_reduced(integer(-23));
    CHECK(l23.count == 3);
    CHECK(l23.forms == std::vector<quad_form>{qf(1, 1, 6), qf(2, -1, 3), qf(2, 1, 3)});
    CHECK(l23.minimal_height_forms() == std::vector<quad_form>{qf(2, -1, 3), qf(2, 1, 3)});

    auto l3 = enumerate_reduced(integer(-3));
    CHECK(l3.forms == std::vector<quad_form>{qf(1, 1, 1)});
    CHECK(enumerate_reduced(integer(-163)).forms == std::vector<quad_form>{qf(1, 1, 41)});
    CHECK(enumerate_reduced(integer(-5)).count == 0);
    CHECK_THROWS_AS(enumerate_reduced(integer(0)), invalid_discriminant);
    CHECK_THROWS_AS(enumerate_reduced(integer(5)), invalid_discriminant);
}

TEST_CASE("enumeration agrees with the naive oracle")
{
    for (long disc = -3; disc >= -400; --disc) {
        for (form_filter f : {form_filter::primitive, form_filter::all}) {
            auto list = enumerate_reduced(integer(disc), f);
            std::set<std::tuple<long, long, long>> got;
            for (auto const & q : list.forms) {
                REQUIRE(3 * q.b * q.b <= -disc);
                REQUIRE(is_reduced(q).reduced);
                got.insert({q.a.get_num().get_si(), q.b.get_num().get_si(), q.c.get_num().get_si()});
            }
            REQUIRE(list.count == list.forms.size());
            REQUIRE(got.size() == list.count);
            REQUIRE(got == brute_reduced(disc, f == form_filter::primitive));
        }
    }
}

TEST_CASE("uniqueness of the reduced representative")
{
    for (long disc = -3; disc >= -200; --disc)
        for (auto const & r : enumerate_reduced(integer(disc), form_filter::all).forms)
            for (int k = 0; k < 50; ++k) {
                int_mat m = testing_support::random_sl2z();
                quad_form moved = act(m, r);
                quad_reduction back = reduce(moved);
                REQUIRE(back.form == r);
                REQUIRE(act(back.transform, moved) == r);
            }
}
