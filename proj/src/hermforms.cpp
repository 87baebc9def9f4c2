#include "binform/hermforms.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <tuple>

namespace binform {

integer discriminant(herm_form const & q)
{
    return q.a * q.c - norm(q.b);
}

double discriminant(complex_herm_form const & q)
{
    return q.a * q.c - std::norm(q.b);
}

bool is_positive_definite(herm_form const & q)
{
    return q.a > 0 && discriminant(q) > 0;
}

bool is_positive_definite(complex_herm_form const & q)
{
    return q.a > 0 && discriminant(q) > 0;
}

complex_herm_form to_complex(herm_form const & q)
{
    return {q.a.get_d(), q.b.to_complex(), q.c.get_d()};
}

std::string to_string(herm_form const & q)
{
    return "[" + q.a.get_str() + ", " + to_string(q.b) + ", " + q.c.get_str() + "]";
}

std::string to_string(complex_herm_form const & q)
{
    return "[" + std::to_string(q.a) + ", " + std::to_string(q.b.real()) + (q.b.imag() < 0 ? "" : "+") +
           std::to_string(q.b.imag()) + "i, " + std::to_string(q.c) + "]";
}

herm_form act_herm(gauss_mat const & m, herm_form const & q)
{
    gaussian_int const A(q.a), C(q.c);
    gaussian_int const bc = conj(q.b);
    gaussian_int a = A * conj(m.a) * m.a + conj(m.a) * q.b * m.c + conj(m.c) * bc * m.a + C * conj(m.c) * m.c;
    gaussian_int b = conj(m.a) * (A * m.b + q.b * m.d) + conj(m.c) * (bc * m.b + C * m.d);
    gaussian_int c = A * conj(m.b) * m.b + conj(m.b) * q.b * m.d + conj(m.d) * bc * m.b + C * conj(m.d) * m.d;
    return {a.re, b, c.re};
}

complex_herm_form act_herm(mat2<cplx> const & m, complex_herm_form const & q)
{
    cplx const bc = std::conj(q.b);
    cplx a = q.a * std::norm(m.a) + std::conj(m.a) * q.b * m.c + std::conj(m.c) * bc * m.a + q.c * std::norm(m.c);
    cplx b = std::conj(m.a) * (q.a * m.b + q.b * m.d) + std::conj(m.c) * (bc * m.b + q.c * m.d);
    cplx c = q.a * std::norm(m.b) + std::conj(m.b) * q.b * m.d + std::conj(m.d) * bc * m.b + q.c * std::norm(m.d);
    return {a.real(), b, c.real()};
}

h3_point zero_map_herm(herm_form const & q)
{
    if (!is_positive_definite(q))
        throw not_positive_definite(to_string(q));
    return zero_map_herm(to_complex(q));
}

h3_point zero_map_herm(complex_herm_form const & q)
{
    if (!is_positive_definite(q))
        throw not_positive_definite(to_string(q));
    return {-q.b / q.a, std::sqrt(discriminant(q)) / q.a};
}

reduced_check is_reduced_herm(herm_form const & q)
{
    if (!is_positive_definite(q))
        throw not_positive_definite(to_string(q));
    integer re2 = 2 * abs(q.b.re);
    integer im2 = 2 * q.b.im;
    bool reduced = re2 <= q.a && im2 <= 0 && -im2 <= q.a && q.a <= q.c;
    bool boundary = re2 == q.a || q.b.im == 0 || -im2 == q.a || q.a == q.c;
    return {reduced, reduced && boundary};
}

namespace {

bool herm_less(herm_form const & x, herm_form const & y)
{
    return std::tie(x.a, x.b.re, x.b.im, x.c) < std::tie(y.a, y.b.re, y.b.im, y.c);
}

std::vector<gauss_mat> const & closure_moves()
{
    static std::vector<gauss_mat> const moves = [] {
        std::vector<gauss_mat> g = {gen::translation(gaussian_int(1)),  gen::translation(gaussian_int(-1)),
                                    gen::translation(gaussian_int(0, 1)), gen::translation(gaussian_int(0, -1)),
                                    gen::rotation(),                     to_gauss(gen::S())};
        std::vector<gauss_mat> out;
        for (auto const & x : g) {
            out.push_back(x);
            for (auto const & y : g) {
                out.push_back(x * y);
                for (auto const & z : g)
                    out.push_back(x * y * z);
            }
        }
        return out;
    }();
    return moves;
}

} // namespace

herm_reduction canonical_herm(herm_form const & q)
{
    if (!is_reduced_herm(q).reduced)
        throw domain_error("canonical_herm needs a reduced form: " + to_string(q));
    if (!is_reduced_herm(q).boundary)
        return {q, gauss_mat::identity(), 0};

    std::vector<std::pair<herm_form, gauss_mat>> seen = {{q, gauss_mat::identity()}};
    std::deque<std::size_t> todo = {0};
    while (!todo.empty()) {
        auto [f, m] = seen[todo.front()];
        todo.pop_front();
        for (auto const & w : closure_moves()) {
            herm_form g = act_herm(w, f);
            if (!is_reduced_herm(g).reduced)
                continue;
            bool known = std::any_of(seen.begin(), seen.end(), [&](auto const & s) { return s.first == g; });
            if (known)
                continue;
            seen.push_back({g, m * w});
            todo.push_back(seen.size() - 1);
        }
    }
    auto best = std::min_element(seen.begin(), seen.end(),
                                 [](auto const & x, auto const & y) { return herm_less(x.first, y.first); });
    return {best->first, best->second, 0};
}

herm_reduction reduce_herm(herm_form const & q)
{
    if (!is_positive_definite(q))
        throw not_positive_definite(to_string(q));

    herm_form cur = q;
    gauss_mat acc = gauss_mat::identity();
    int steps = 0;
    std::size_t guard = 64 + 2 * std::max({bit_length(q.a), bit_length(q.c), bit_length(q.b.re), bit_length(q.b.im)});
    for (std::size_t round = 0;; ++round) {
        if (round > guard)
            throw non_termination("hermitian reduction guard exceeded");
        gaussian_int beta(round_half_toward_zero(make_rational(-cur.b.re, cur.a)),
                          round_half_toward_zero(make_rational(-cur.b.im, cur.a)));
        if (!beta.is_zero()) {
            gauss_mat t = gen::translation(beta);
            cur = act_herm(t, cur);
            acc = acc * t;
        }
        if (cur.b.im > 0) {
            cur = act_herm(gen::rotation(), cur);
            acc = acc * gen::rotation();
        }
        if (cur.c < cur.a) {
            gauss_mat s = to_gauss(gen::S());
            cur = act_herm(s, cur);
            acc = acc * s;
            ++steps;
            continue;
        }
        break;
    }
    herm_reduction canon = canonical_herm(cur);
    return {canon.form, acc * canon.transform, steps};
}

herm_class_list enumerate_reduced_herm(integer const & disc)
{
    if (disc <= 0)
        throw invalid_discriminant("hermitian enumeration needs disc > 0, got " + disc.get_str());
    herm_class_list out;
    out.discriminant = disc;
    // a <= c and |b|^2 <= a^2/2 give a^2 <= 2 disc
    for (integer a = 1; a * a <= 2 * disc; ++a) {
        integer lo = -(a / 2);
        for (integer re = lo; 2 * re <= a; ++re) {
            for (integer im = lo; im <= 0; ++im) {
                integer num = disc + re * re + im * im;
                if (num % a != 0)
                    continue;
                integer c = num / a;
                if (c < a)
                    continue;
                out.forms.push_back({a, gaussian_int(re, im), c});
            }
        }
    }
    std::sort(out.forms.begin(), out.forms.end(), herm_less);
    out.count = out.forms.size();
    return out;
}

std::vector<herm_form> herm_class_representatives(integer const & disc)
{
    std::vector<herm_form> out;
    for (auto const & f : enumerate_reduced_herm(disc).forms) {
        herm_form c = canonical_herm(f).form;
        if (std::find(out.begin(), out.end(), c) == out.end())
            out.push_back(c);
    }
    std::sort(out.begin(), out.end(), herm_less);
    return out;
}

/* ---------------------------------------------------------------- */

namespace {

bool squarefree(long n)
{
    n = std::labs(n);
    for (long p = 2; p * p <= n; ++p)
        if (n % (p * p) == 0)
            return false;
    return true;
}

} // namespace

imaginary_quadratic_field::imaginary_quadratic_field(long D) : D_(D)
{
    if (D >= 0 || !squarefree(D))
        throw invalid_discriminant("field needs a negative square-free D, got " + std::to_string(D));
    long r = ((D % 4) + 4) % 4;
    d_K_ = r == 1 ? D : 4 * D;
}

bool imaginary_quadratic_field::class_number_one() const
{
    for (long d : {-1, -2, -3, -7, -11, -19, -43, -67, -163})
        if (D_ == d)
            return true;
    return false;
}

cplx imaginary_quadratic_field::embed(long x, long y) const
{
    double s = std::sqrt(static_cast<double>(-D_));
    if (d_K_ == D_)
        return {x + 0.5 * y, 0.5 * s * y};
    return {static_cast<double>(x), s * y};
}

long imaginary_quadratic_field::norm(long x, long y) const
{
    if (d_K_ == D_)
        return x * x + x * y + y * y * ((1 - D_) / 4);
    return x * x - D_ * y * y;
}

integer imaginary_quadratic_field::ideal_norm(long x1, long y1, long x2, long y2) const
{
    // rows: e, e*w for both generators, in the basis (1, w)
    auto times_w = [this](long x, long y) -> std::pair<long, long> {
        if (d_K_ == D_)
            return {y * ((D_ - 1) / 4), x + y};
        return {y * D_, x};
    };
    std::vector<std::pair<integer, integer>> rows = {{x1, y1}, {x2, y2}};
    auto w1 = times_w(x1, y1), w2 = times_w(x2, y2);
    rows.push_back({w1.first, w1.second});
    rows.push_back({w2.first, w2.second});
    // lattice index = gcd of all 2x2 minors
    integer g = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            integer m = rows[i].first * rows[j].second - rows[i].second * rows[j].first;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
        }
    return g;
}

membership in_B_K(h3_point const & p, imaginary_quadratic_field const & K, long search_bound, double tol)
{
    if (!K.class_number_one())
        throw policy_not_applicable("in_B_K needs class number one");
    if (search_bound < 1)
        throw domain_error("search bound must be >= 1");

    struct elem {
        long x, y;
        cplx v;
    };
    std::vector<elem> elems;
    long lim = 2 * static_cast<long>(std::sqrt(static_cast<double>(search_bound))) + 2;
    for (long x = -lim; x <= lim; ++x)
        for (long y = -lim; y <= lim; ++y)
            if (K.norm(x, y) <= search_bound)
                elems.push_back({x, y, K.embed(x, y)});

    double t2 = p.t * p.t;
    double least = std::numeric_limits<double>::infinity();
    for (auto const & c : elems) {
        if (c.x == 0 && c.y == 0)
            continue;
        for (auto const & d : elems) {
            if (K.ideal_norm(c.x, c.y, d.x, d.y) != 1)
                continue;
            double v = std::norm(c.v * p.z + d.v) + std::norm(c.v) * t2;
            least = std::min(least, v);
        }
    }
    if (least < 1.0 - tol)
        return membership::outside;
    return std::fabs(least - 1.0) <= tol ? membership::boundary : membership::interior;
}

namespace {

membership band(bool outside, bool on_edge)
{
    if (outside)
        return membership::outside;
    return on_edge ? membership::boundary : membership::interior;
}

} // namespace

membership in_P_K(cplx z, imaginary_quadratic_field const & K, double tol)
{
    double x = z.real(), y = z.imag();
    double top = std::sqrt(static_cast<double>(-K.d_K())) / 2;
    bool out = x < -tol || x > 1 + tol || y < -tol || y > top + tol;
    bool edge = std::fabs(x) <= tol || std::fabs(x - 1) <= tol || std::fabs(y) <= tol || std::fabs(y - top) <= tol;
    return band(out, edge);
}

membership in_F_K_floor(cplx z, imaginary_quadratic_field const & K, double tol)
{
    double x = z.real(), y = z.imag();
    if (K.D() == -1) {
        double ax = std::fabs(x);
        bool out = ax > 0.5 + tol || y < -tol || y > 0.5 + tol;
        bool edge = std::fabs(ax - 0.5) <= tol || std::fabs(y) <= tol || std::fabs(y - 0.5) <= tol;
        return band(out, edge);
    }
    if (K.D() == -3) {
        double k = std::sqrt(3.0) / 3;
        // upper triangle: x >= 0, k x <= y <= k (1 - x)
        double g1 = x, g2 = y - k * x, g3 = k * (1 - x) - y;
        // lower triangle: 0 <= x <= 1/2, -k x <= y <= k x
        double h1 = x, h2 = 0.5 - x, h3 = y + k * x, h4 = k * x - y;
        double up = std::min({g1, g2, g3});
        double lo = std::min({h1, h2, h3, h4});
        double best = std::max(up, lo);
        return band(best < -tol, std::fabs(best) <= tol);
    }
    return in_P_K(z, K, tol);
}

} // namespace binform
