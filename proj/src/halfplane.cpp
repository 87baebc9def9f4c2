#include "binform/halfplane.hpp"

#include <cmath>
#include <limits>

namespace binform {

h2_point::h2_point(double x_, double y_) : x(x_), y(y_)
{
    if (!(y > 0.0))
        throw domain_error("h2_point needs y > 0");
}

h3_point::h3_point(cplx z_, double t_) : z(z_), t(t_)
{
    if (!(t > 0.0))
        throw domain_error("h3_point needs t > 0");
}

std::string to_string(membership m)
{
    switch (m) {
    case membership::interior:
        return "interior";
    case membership::boundary:
        return "boundary";
    case membership::outside:
        return "outside";
    }
    return "?";
}

h2_point mobius_h2(int_mat const & m, h2_point const & p)
{
    mat2<cplx> cm = to_complex(m);
    cplx z = p.as_complex();
    cplx den = cm.c * z + cm.d;
    cplx w = (cm.a * z + cm.b) / den;
    // Im(Mz) = det(M) Im z / |cz + d|^2 evaluated directly keeps the sign
    double y = p.y / std::norm(den);
    return {w.real(), y};
}

h3_point mobius_h3(mat2<cplx> const & m, h3_point const & p)
{
    cplx const & al = m.a;
    cplx const & be = m.b;
    cplx const & ga = m.c;
    cplx const & de = m.d;
    double t2 = p.t * p.t;
    double den = std::norm(ga * p.z + de) + std::norm(ga) * t2;
    cplx z = ((al * p.z + be) * std::conj(ga * p.z + de) + al * std::conj(ga) * t2) / den;
    return {z, p.t / den};
}

h3_point mobius_h3(gauss_mat const & m, h3_point const & p)
{
    return mobius_h3(to_complex(m), p);
}

cplx sphere_infinity()
{
    return {std::numeric_limits<double>::infinity(), 0.0};
}

bool is_sphere_infinity(cplx z)
{
    return std::isinf(z.real()) || std::isinf(z.imag());
}

cplx mobius_sphere(mat2<cplx> const & m, cplx z)
{
    if (is_sphere_infinity(z)) {
        if (m.c == cplx(0.0))
            return sphere_infinity();
        return m.a / m.c;
    }
    cplx den = m.c * z + m.d;
    if (den == cplx(0.0))
        return sphere_infinity();
    return (m.a * z + m.b) / den;
}

namespace {

membership classify(bool outside, bool on_band)
{
    if (outside)
        return membership::outside;
    return on_band ? membership::boundary : membership::interior;
}

} // namespace

membership in_F_h2(h2_point const & p, double tol)
{
    double ax = std::fabs(p.x);
    double r = std::hypot(p.x, p.y);
    bool outside = ax > 0.5 + tol || r < 1.0 - tol;
    bool band = std::fabs(ax - 0.5) <= tol || std::fabs(r - 1.0) <= tol;
    return classify(outside, band);
}

membership in_F_h3_Qi(h3_point const & p, double tol)
{
    double ax = std::fabs(p.z.real());
    double y = p.z.imag();
    double rr = std::sqrt(std::norm(p.z) + p.t * p.t);
    bool outside = ax > 0.5 + tol || y < -tol || y > 0.5 + tol || rr < 1.0 - tol;
    // the face Im z = 0 is not reported: (0, 2) counts as interior
    bool band = std::fabs(ax - 0.5) <= tol || std::fabs(y - 0.5) <= tol || std::fabs(rr - 1.0) <= tol;
    return classify(outside, band);
}

h2_reduction reduce_point_h2(h2_point const & p)
{
    h2_point cur = p;
    int_mat acc = int_mat::identity();
    double const tol = default_domain_tol;
    for (int round = 0; round < point_reduction_guard; ++round) {
        if (!std::isfinite(cur.x) || !std::isfinite(cur.y))
            break;
        if (std::fabs(cur.x) > 0.5 + tol) {
            double m = round_half_toward_zero(cur.x);
            int_mat shift = gen::T(integer(-m));
            cur = mobius_h2(shift, cur);
            acc = shift * acc;
            continue;
        }
        if (std::hypot(cur.x, cur.y) < 1.0 - tol) {
            cur = mobius_h2(gen::S(), cur);
            acc = gen::S() * acc;
            continue;
        }
        return {cur, acc};
    }
    throw non_termination("reduce_point_h2: guard exceeded");
}

h3_reduction reduce_point_h3_Qi(h3_point const & p)
{
    h3_point cur = p;
    gauss_mat acc = gauss_mat::identity();
    double const tol = default_domain_tol;
    gauss_mat const s = to_gauss(gen::S());
    for (int round = 0; round < point_reduction_guard; ++round) {
        if (!std::isfinite(cur.z.real()) || !std::isfinite(cur.z.imag()) || !std::isfinite(cur.t))
            break;
        double x = cur.z.real(), y = cur.z.imag();
        if (std::fabs(x) > 0.5 + tol || std::fabs(y) > 0.5 + tol) {
            double mx = std::fabs(x) > 0.5 + tol ? round_half_toward_zero(x) : 0.0;
            double my = std::fabs(y) > 0.5 + tol ? round_half_toward_zero(y) : 0.0;
            gaussian_int beta(integer(-mx), integer(-my));
            gauss_mat shift = gen::translation(beta);
            cur = mobius_h3(shift, cur);
            acc = shift * acc;
            continue;
        }
        if (y < -tol) {
            cur = mobius_h3(gen::rotation(), cur);
            acc = gen::rotation() * acc;
            continue;
        }
        if (std::norm(cur.z) + cur.t * cur.t < (1.0 - tol) * (1.0 - tol)) {
            cur = mobius_h3(s, cur);
            acc = s * acc;
            continue;
        }
        return {cur, acc};
    }
    throw non_termination("reduce_point_h3_Qi: guard exceeded");
}

/* ---------------------------------------------------------------- */

integer st_word::expanded_length() const
{
    integer total = 0;
    for (auto const & s : syllables)
        total += abs(s.power);
    return total;
}

int_mat st_word::product() const
{
    int_mat acc = int_mat::identity();
    for (auto const & s : syllables)
        acc = acc * (s.g == st_syllable::gen::S ? gen::S() : gen::T(s.power));
    return acc;
}

std::string st_word::str() const
{
    std::string out;
    for (auto const & s : syllables) {
        if (!out.empty())
            out += " ";
        if (s.g == st_syllable::gen::S)
            out += "S";
        else if (s.power == 1)
            out += "T";
        else
            out += "T^" + s.power.get_str();
    }
    return out.empty() ? "I" : out;
}

st_word decompose_ST(int_mat const & m)
{
    if (det(m) != 1)
        throw domain_error("decompose_ST needs det = 1");
    // m = T^q S m'  with  m' = S^-1 T^-q m; S^-1 = -S, so up to sign
    // m' = S T^-q m, whose lower-left entry is a - q c.
    st_word w;
    int_mat cur = m;
    while (cur.c != 0) {
        integer q = round_half_toward_zero(make_rational(cur.a, cur.c));
        if (q != 0)
            w.syllables.push_back({st_syllable::gen::T, q});
        w.syllables.push_back({st_syllable::gen::S, 1});
        cur = gen::S() * (gen::T(integer(-q)) * cur);
    }
    // cur = +-[[1, k], [0, 1]]
    integer k = cur.a * cur.b;
    if (k != 0)
        w.syllables.push_back({st_syllable::gen::T, k});
    return w;
}

} // namespace binform
