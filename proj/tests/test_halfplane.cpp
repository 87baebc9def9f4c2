#include <doctest.h>

#include <cmath>
#include <numbers>

#include "binform/halfplane.hpp"
#include "support.hpp"

using namespace binform;
using testing_support::rel_err;
using testing_support::uniform;

namespace {

cplx const rho = std::polar(1.0, 2 * std::numbers::pi / 3);

bool near(h2_point const & p, cplx z, double tol = 1e-14)
{
    return std::abs(p.as_complex() - z) <= tol * std::max(1.0, std::abs(z));
}

bool near(h3_point const & p, cplx z, double t, double tol = 1e-14)
{
    return std::abs(p.z - z) <= tol && std::fabs(p.t - t) <= tol;
}

double random_unit()
{
    return std::uniform_real_distribution<double>(0.0, 1.0)(testing_support::rng());
}

} // namespace

TEST_CASE("points need a positive height")
{
    CHECK_THROWS_AS(h2_point(0.0, 0.0), domain_error);
    CHECK_THROWS_AS(h3_point(cplx(1.0), -1.0), domain_error);
}

TEST_CASE("mobius on the upper half-plane")
{
    h2_point i(0.0, 1.0);
    CHECK(near(mobius_h2(gen::T(), i), {1, 1}));
    CHECK(near(mobius_h2(gen::S(), i), {0, 1}));
    CHECK(near(mobius_h2(gen::S() * gen::T(), h2_point(rho)), rho));
    CHECK(near(mobius_h2(gen::T() * gen::S(), h2_point(-std::conj(rho))), -std::conj(rho)));

    for (int k = 0; k < 500; ++k) {
        h2_point p(uniform(-50, 50) * 0.1 + random_unit(), 0.01 + 3 * random_unit());
        int_mat m = testing_support::random_sl2z();
        mat2<cplx> cm = to_complex(m);
        double expect = p.y / std::norm(cm.c * p.as_complex() + cm.d);
        h2_point q = mobius_h2(m, p);
        REQUIRE(q.y > 0);
        REQUIRE(std::fabs(q.y - expect) <= 1e-13 * expect);
    }
}

TEST_CASE("transitivity witness maps infinity to z")
{
    for (int k = 0; k < 100; ++k) {
        cplx z(uniform(-100, 100) * 0.05, uniform(-100, 100) * 0.05);
        mat2<cplx> m{z, z - 1.0, 1.0, 1.0};
        CHECK(std::abs(det(m) - 1.0) <= 1e-14);
        CHECK(std::abs(mobius_sphere(m, sphere_infinity()) - z) <= 1e-14);
    }
}

TEST_CASE("mobius on upper half-space")
{
    h3_point p(cplx(0.3, -0.7), 0.4);
    h3_point q = mobius_h3(gen::translation(gaussian_int(2, -1)), p);
    CHECK(near(q, p.z + cplx(2, -1), p.t));

    double r = std::norm(p.z) + p.t * p.t;
    h3_point s = mobius_h3(to_gauss(gen::S()), p);
    CHECK(near(s, -std::conj(p.z) / r, p.t / r));

    h3_point o = mobius_h3(to_gauss(gen::S()), h3_point(cplx(0.0), 1.0));
    CHECK(near(o, 0.0, 1.0));

    h3_point u = mobius_h3(gen::rotation(), p);
    CHECK(near(u, -p.z, p.t));
}

TEST_CASE("standard domain membership")
{
    CHECK(in_F_h2(h2_point(0, 2)) == membership::interior);
    CHECK(in_F_h2(h2_point(rho)) == membership::boundary);
    CHECK(in_F_h2(h2_point(0.1, 0.2)) == membership::outside);
    CHECK(in_F_h2(h2_point(0.5, 5)) == membership::boundary);
    CHECK(in_F_h2(h2_point(0.6, 5)) == membership::outside);
}

TEST_CASE("point reduction on the upper half-plane")
{
    h2_reduction a = reduce_point_h2(h2_point(0.2, 1.5));
    CHECK(near(a.point, {0.2, 1.5}));
    CHECK(a.transform == int_mat::identity());

    h2_reduction b = reduce_point_h2(h2_point(5, 2));
    CHECK(near(b.point, {0, 2}));
    CHECK(b.transform == gen::T(-5));

    h2_point p(0.1, 0.2);
    h2_reduction c = reduce_point_h2(p);
    CHECK(in_F_h2(c.point) != membership::outside);
    CHECK(near(mobius_h2(c.transform, p), c.point.as_complex(), 1e-13));

    // independent oracle: some word of length <= 12 in S, T, T^-1 lands on
    // the same point of F
    std::vector<int_mat> letters = {gen::S(), gen::T(), gen::T(-1)};
    bool found = false;
    std::vector<std::pair<int_mat, int>> frontier = {{int_mat::identity(), 0}};
    while (!frontier.empty() && !found) {
        auto [m, len] = frontier.back();
        frontier.pop_back();
        h2_point q = mobius_h2(m, p);
        if (in_F_h2(q) != membership::outside && std::abs(q.as_complex() - c.point.as_complex()) < 1e-9) {
            found = true;
            break;
        }
        if (len < 12)
            for (auto const & l : letters)
                frontier.push_back({l * m, len + 1});
    }
    CHECK(found);
}

TEST_CASE("point reduction is idempotent and lands in F")
{
    for (int k = 0; k < 300; ++k) {
        h2_point p(uniform(-40, 40) * 0.25 + random_unit(), 0.001 + random_unit());
        h2_reduction r = reduce_point_h2(p);
        REQUIRE(in_F_h2(r.point) != membership::outside);
        REQUIRE(rel_err(mobius_h2(r.transform, p).as_complex(), r.point.as_complex()) <= 1e-9);
        if (in_F_h2(r.point) == membership::interior) {
            h2_reduction again = reduce_point_h2(r.point);
            REQUIRE(is_projective_identity(again.transform));
            REQUIRE(near(again.point, r.point.as_complex()));
        }
    }
}

TEST_CASE("Picard domain membership and point reduction")
{
    CHECK(in_F_h3_Qi(h3_point(cplx(0), 2)) == membership::interior);
    CHECK(in_F_h3_Qi(h3_point(cplx(0.5), std::sqrt(3.0) / 2)) == membership::boundary);
    CHECK(in_F_h3_Qi(h3_point(cplx(0.3, 0.3), 0.1)) == membership::outside);
    CHECK(in_F_h3_Qi(h3_point(cplx(0.2, -0.1), 2)) == membership::outside);

    h3_reduction a = reduce_point_h3_Qi(h3_point(cplx(0.0), 2.0));
    CHECK(a.transform == gauss_mat::identity());

    for (h3_point p : {h3_point(cplx(3, 4), 1.0), h3_point(cplx(0.1, 0.1), 0.2)}) {
        h3_reduction r = reduce_point_h3_Qi(p);
        CHECK(in_F_h3_Qi(r.point) != membership::outside);
        h3_point q = mobius_h3(r.transform, p);
        CHECK(std::abs(q.z - r.point.z) <= 1e-12);
        CHECK(std::fabs(q.t - r.point.t) <= 1e-12);
        CHECK(det(r.transform) == gaussian_int(1));
    }
    h3_reduction b = reduce_point_h3_Qi(h3_point(cplx(0.1, 0.1), 0.2));
    CHECK(b.point.t > 0.2);

    for (int k = 0; k < 300; ++k) {
        h3_point p(cplx(uniform(-30, 30) * 0.3 + random_unit(), uniform(-30, 30) * 0.3 + random_unit()),
                   0.01 + random_unit());
        h3_reduction r = reduce_point_h3_Qi(p);
        REQUIRE(in_F_h3_Qi(r.point) != membership::outside);
    }
}

TEST_CASE("S T words")
{
    st_word s = decompose_ST(gen::S());
    CHECK(s.str() == "S");
    CHECK(is_projective_identity(mat_inv(gen::S()) * s.product()));

    st_word t3 = decompose_ST(gen::T(3));
    CHECK(t3.str() == "T^3");
    CHECK(t3.expanded_length() == 3);
    CHECK(t3.product() == gen::T(3));

    int_mat m{2, 1, 1, 1};
    CHECK(is_projective_identity(mat_inv(m) * decompose_ST(m).product()));
    CHECK(decompose_ST(int_mat::identity()).str() == "I");

    for (int k = 0; k < 500; ++k) {
        int_mat r = testing_support::random_sl2z(12, 5, 100000);
        st_word w = decompose_ST(r);
        REQUIRE(is_projective_identity(mat_inv(r) * w.product()));
        std::size_t bits = std::max({bit_length(r.a), bit_length(r.b), bit_length(r.c), bit_length(r.d)});
        REQUIRE(w.length() <= 4 * bits + 8);
    }
}
