#include "binform/arith.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

namespace binform {

rational make_rational(integer const & num, integer const & den)
{
    if (den == 0)
        throw degenerate_input("zero denominator");
    rational q(num, den);
    q.canonicalize();
    return q;
}

integer round_half_toward_zero(rational const & q)
{
    // floor(|q| + 1/2) rounds ties up in magnitude; ties toward zero need
    // ceil(|q| - 1/2) instead.
    rational mag = abs(q) - rational(1, 2);
    integer r;
    mpz_cdiv_q(r.get_mpz_t(), mag.get_num_mpz_t(), mag.get_den_mpz_t());
    if (r < 0)
        r = 0;
    return q < 0 ? integer(-r) : r;
}

double round_half_toward_zero(double x)
{
    double r = std::ceil(std::fabs(x) - 0.5);
    if (r < 0)
        r = 0;
    return std::copysign(r, x);
}

std::size_t bit_length(integer const & x)
{
    if (x == 0)
        return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

/* ---------------------------------------------------------------- */

gaussian_int & gaussian_int::operator+=(gaussian_int const & o)
{
    re += o.re;
    im += o.im;
    return *this;
}

gaussian_int & gaussian_int::operator-=(gaussian_int const & o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

gaussian_int & gaussian_int::operator*=(gaussian_int const & o)
{
    integer r = re * o.re - im * o.im;
    integer i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

gaussian_int operator+(gaussian_int x, gaussian_int const & y) { return x += y; }
gaussian_int operator-(gaussian_int x, gaussian_int const & y) { return x -= y; }
gaussian_int operator*(gaussian_int x, gaussian_int const & y) { return x *= y; }
gaussian_int operator-(gaussian_int const & x) { return {integer(-x.re), integer(-x.im)}; }
gaussian_int conj(gaussian_int const & x) { return {x.re, integer(-x.im)}; }
integer norm(gaussian_int const & x) { return x.re * x.re + x.im * x.im; }

bool operator<(gaussian_int const & x, gaussian_int const & y)
{
    if (x.re != y.re)
        return x.re < y.re;
    return x.im < y.im;
}

std::string to_string(gaussian_int const & x)
{
    return to_string(gaussian_rational(x));
}

std::ostream & operator<<(std::ostream & os, gaussian_int const & x)
{
    return os << to_string(x);
}

bool gaussian_rational::is_integral() const
{
    return re.get_den() == 1 && im.get_den() == 1;
}

gaussian_int gaussian_rational::to_gaussian_int() const
{
    if (!is_integral())
        throw domain_error("not a Gaussian integer: " + to_string(*this));
    return {re.get_num(), im.get_num()};
}

gaussian_rational operator+(gaussian_rational const & x, gaussian_rational const & y)
{
    return {rational(x.re + y.re), rational(x.im + y.im)};
}

gaussian_rational operator-(gaussian_rational const & x, gaussian_rational const & y)
{
    return {rational(x.re - y.re), rational(x.im - y.im)};
}

gaussian_rational operator-(gaussian_rational const & x)
{
    return {rational(-x.re), rational(-x.im)};
}

gaussian_rational operator*(gaussian_rational const & x, gaussian_rational const & y)
{
    return {rational(x.re * y.re - x.im * y.im), rational(x.re * y.im + x.im * y.re)};
}

gaussian_rational operator/(gaussian_rational const & x, gaussian_rational const & y)
{
    rational n = y.re * y.re + y.im * y.im;
    if (n == 0)
        throw degenerate_input("division by zero");
    return {rational((x.re * y.re + x.im * y.im) / n), rational((x.im * y.re - x.re * y.im) / n)};
}

std::string to_string(gaussian_rational const & x)
{
    if (x.im == 0)
        return x.re.get_str();
    std::string imag;
    rational mag = abs(x.im);
    if (mag != 1)
        imag = mag.get_str();
    imag += "i";
    if (x.re == 0)
        return (x.im < 0 ? "-" : "") + imag;
    return x.re.get_str() + (x.im < 0 ? "-" : "+") + imag;
}

namespace {

rational parse_rational(std::string const & s, std::string const & whole)
{
    if (s.empty())
        throw parse_error("malformed number: '" + whole + "'");
    std::size_t slash = s.find('/');
    auto digits_ok = [](std::string const & t) {
        return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den))
        throw parse_error("malformed number: '" + whole + "'");
    rational q;
    q.get_num() = integer(num);
    q.get_den() = integer(den);
    if (q.get_den() == 0)
        throw parse_error("zero denominator: '" + whole + "'");
    q.canonicalize();
    return q;
}

} // namespace

gaussian_rational parse_gaussian_rational(std::string const & text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.empty())
        throw parse_error("empty coefficient");

    // split into signed terms at '+'/'-' that are not leading
    std::vector<std::string> terms;
    std::size_t start = 0;
    for (std::size_t k = 1; k <= s.size(); ++k) {
        if (k == s.size() || s[k] == '+' || s[k] == '-') {
            terms.push_back(s.substr(start, k - start));
            start = k;
        }
    }
    if (terms.size() > 2)
        throw parse_error("malformed coefficient: '" + text + "'");

    gaussian_rational out;
    bool seen_re = false, seen_im = false;
    for (std::string t : terms) {
        bool neg = false;
        if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
            neg = t[0] == '-';
            t = t.substr(1);
        }
        if (!t.empty() && t.back() == 'i') {
            if (seen_im)
                throw parse_error("malformed coefficient: '" + text + "'");
            seen_im = true;
            t.pop_back();
            rational v = t.empty() ? rational(1) : parse_rational(t, text);
            out.im = neg ? rational(-v) : v;
        } else {
            if (seen_re)
                throw parse_error("malformed coefficient: '" + text + "'");
            seen_re = true;
            rational v = parse_rational(t, text);
            out.re = neg ? rational(-v) : v;
        }
    }
    return out;
}

/* ---------------------------------------------------------------- */

namespace {

template <class T>
mat2<T> adjugate_of_unimodular(mat2<T> const & m)
{
    if (!(det(m) == T(1)))
        throw domain_error("matrix is not in SL2: det != 1");
    return {m.d, -m.b, -m.c, m.a};
}

template <class T>
bool proj_identity(mat2<T> const & m)
{
    T const one(1), zero(0);
    T const minus_one = -one;
    return m.b == zero && m.c == zero &&
           ((m.a == one && m.d == one) || (m.a == minus_one && m.d == minus_one));
}

} // namespace

int_mat mat_inv(int_mat const & m) { return adjugate_of_unimodular(m); }
gauss_mat mat_inv(gauss_mat const & m) { return adjugate_of_unimodular(m); }
bool is_projective_identity(int_mat const & m) { return proj_identity(m); }
bool is_projective_identity(gauss_mat const & m) { return proj_identity(m); }

gauss_mat to_gauss(int_mat const & m)
{
    return {gaussian_int(m.a), gaussian_int(m.b), gaussian_int(m.c), gaussian_int(m.d)};
}

mat2<cplx> to_complex(int_mat const & m)
{
    return {m.a.get_d(), m.b.get_d(), m.c.get_d(), m.d.get_d()};
}

mat2<cplx> to_complex(gauss_mat const & m)
{
    return {m.a.to_complex(), m.b.to_complex(), m.c.to_complex(), m.d.to_complex()};
}

std::string to_string(int_mat const & m)
{
    return "[[" + m.a.get_str() + "," + m.b.get_str() + "],[" + m.c.get_str() + "," + m.d.get_str() + "]]";
}

std::string to_string(gauss_mat const & m)
{
    return "[[" + to_string(m.a) + "," + to_string(m.b) + "],[" + to_string(m.c) + "," + to_string(m.d) +
           "]]";
}

namespace gen {
int_mat S() { return {0, -1, 1, 0}; }
int_mat T(integer const & k) { return {1, k, 0, 1}; }
gauss_mat translation(gaussian_int const & beta) { return {1, beta, 0, 1}; }
gauss_mat rotation() { return {gaussian_int(0, 1), 0, 0, gaussian_int(0, -1)}; }
} // namespace gen

/* ---------------------------------------------------------------- */

poly::poly(std::vector<cplx> ascending_coeffs) : coeffs_(std::move(ascending_coeffs))
{
    while (!coeffs_.empty() && coeffs_.back() == cplx(0.0))
        coeffs_.pop_back();
    if (coeffs_.empty())
        coeffs_.push_back(0.0);
}

poly poly::from_descending(std::span<cplx const> coeffs)
{
    return poly(std::vector<cplx>(coeffs.rbegin(), coeffs.rend()));
}

cplx poly::operator()(cplx x) const
{
    cplx acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

double poly::scale_at(double abs_x) const
{
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * abs_x + std::abs(*it);
    return acc;
}

poly poly::derivative() const
{
    if (coeffs_.size() <= 1)
        return poly({0.0});
    std::vector<cplx> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = coeffs_[k] * static_cast<double>(k);
    return poly(std::move(d));
}

poly poly::from_roots(std::span<cplx const> roots, cplx lead)
{
    std::vector<cplx> c{lead};
    for (cplx r : roots) {
        std::vector<cplx> next(c.size() + 1, 0.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = std::move(next);
    }
    return poly(std::move(c));
}

namespace {

bool is_real_poly(std::vector<cplx> const & c)
{
    return std::all_of(c.begin(), c.end(), [](cplx z) { return z.imag() == 0.0; });
}

/* Replace each near-conjugate pair by an exact pair, and snap roots whose
 * partner is themselves onto the real axis. */
void enforce_conjugate_closure(std::vector<cplx> & roots)
{
    std::size_t const n = roots.size();
    std::vector<bool> done(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (done[i])
            continue;
        std::size_t best = i;
        double best_d = std::abs(roots[i] - std::conj(roots[i]));
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || done[j])
                continue;
            double d = std::abs(roots[j] - std::conj(roots[i]));
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        if (best == i) {
            roots[i] = roots[i].real();
            done[i] = true;
        } else {
            cplx avg = 0.5 * (roots[i] + std::conj(roots[best]));
            if (avg.imag() < 0)
                avg = std::conj(avg);
            roots[i] = avg;
            roots[best] = std::conj(avg);
            done[i] = done[best] = true;
        }
    }
}

} // namespace

std::vector<cplx> find_roots(poly const & p, root_finder_options const & opt)
{
    if (p.degree() < 1)
        throw degenerate_input("root finding needs degree >= 1");

    std::vector<cplx> const & c0 = p.coeffs();
    double const coeff_scale = p.scale_at(1.0);
    if (std::abs(p.leading()) <= opt.tol * coeff_scale)
        throw degenerate_input("leading coefficient vanishes");

    // split off exact zero roots
    std::size_t zeros = 0;
    while (zeros < c0.size() && c0[zeros] == cplx(0.0))
        ++zeros;
    std::vector<cplx> roots(zeros, 0.0);
    poly q(std::vector<cplx>(c0.begin() + static_cast<std::ptrdiff_t>(zeros), c0.end()));
    int const n = q.degree();
    if (n == 0)
        return roots;

    std::vector<cplx> const & c = q.coeffs();
    poly const dq = q.derivative();

    // Cauchy bound on root modulus
    double radius = 0.0;
    for (int k = 0; k < n; ++k)
        radius = std::max(radius, std::abs(c[k] / c[n]));
    radius = 1.0 + radius;
    // tighten with the geometric-mean radius, which is far smaller for
    // polynomials with widely spread coefficients
    double const gm = std::pow(std::abs(c[0] / c[n]), 1.0 / n);
    double const r0 = std::min(radius, std::max(gm, 1e-3));

    std::vector<cplx> z(n);
    for (int k = 0; k < n; ++k) {
        double ang = 2.0 * std::numbers::pi * k / n + 0.4;
        z[k] = std::polar(r0, ang);
    }

    std::vector<bool> converged(n, false);
    int remaining = n;
    for (int it = 0; it < opt.max_iterations && remaining > 0; ++it) {
        for (int i = 0; i < n; ++i) {
            if (converged[i])
                continue;
            cplx pv = q(z[i]);
            double az = std::abs(z[i]);
            if (std::abs(pv) <= opt.tol * q.scale_at(az)) {
                converged[i] = true;
                --remaining;
                continue;
            }
            cplx dv = dq(z[i]);
            cplx ratio = pv / dv;
            cplx sum = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i)
                    sum += 1.0 / (z[i] - z[j]);
            cplx w = ratio / (1.0 - ratio * sum);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
                w = ratio;
            z[i] -= w;
            if (std::abs(w) <= 4 * std::numeric_limits<double>::epsilon() * std::abs(z[i])) {
                converged[i] = true;
                --remaining;
            }
        }
    }
    if (remaining > 0) {
        // accept stagnated iterates that still meet a looser residual
        for (int i = 0; i < n; ++i) {
            if (converged[i])
                continue;
            if (std::abs(q(z[i])) > 1e3 * opt.tol * q.scale_at(std::abs(z[i])))
                throw non_convergence("Aberth iteration did not converge");
        }
    }

    roots.insert(roots.end(), z.begin(), z.end());
    if (is_real_poly(c0))
        enforce_conjugate_closure(roots);
    return roots;
}

std::vector<cplx> find_roots(poly const & p, double tol)
{
    root_finder_options opt;
    opt.tol = tol;
    return find_roots(p, opt);
}

namespace {

struct mp_cplx {
    mpf_class re, im;
};

mp_cplx mp_mul(mp_cplx const & x, mp_cplx const & y, unsigned bits)
{
    mp_cplx r{mpf_class(0, bits), mpf_class(0, bits)};
    r.re = x.re * y.re - x.im * y.im;
    r.im = x.re * y.im + x.im * y.re;
    return r;
}

mp_cplx mp_div(mp_cplx const & x, mp_cplx const & y, unsigned bits)
{
    mpf_class d(y.re * y.re + y.im * y.im, bits);
    mp_cplx r{mpf_class(0, bits), mpf_class(0, bits)};
    r.re = (x.re * y.re + x.im * y.im) / d;
    r.im = (x.im * y.re - x.re * y.im) / d;
    return r;
}

} // namespace

std::vector<cplx> refine_roots(std::vector<gaussian_rational> const & ascending, std::vector<cplx> const & approx,
                               unsigned bits)
{
    std::size_t const n = approx.size();
    if (n == 0 || ascending.size() != n + 1)
        return approx;
    bool real = std::all_of(ascending.begin(), ascending.end(), [](gaussian_rational const & x) { return x.is_real(); });

    auto mk = [bits](double v) { return mpf_class(v, bits); };
    std::vector<mp_cplx> coef, dcoef;
    for (std::size_t k = 0; k < ascending.size(); ++k) {
        coef.push_back({mpf_class(ascending[k].re, bits), mpf_class(ascending[k].im, bits)});
        if (k > 0)
            dcoef.push_back({mpf_class(ascending[k].re * static_cast<long>(k), bits),
                             mpf_class(ascending[k].im * static_cast<long>(k), bits)});
    }
    auto horner = [&](std::vector<mp_cplx> const & c, mp_cplx const & z) {
        mp_cplx acc = c.back();
        for (std::size_t k = c.size() - 1; k-- > 0;) {
            acc = mp_mul(acc, z, bits);
            acc.re += c[k].re;
            acc.im += c[k].im;
        }
        return acc;
    };

    std::vector<mp_cplx> z;
    for (std::size_t i = 0; i < n; ++i) {
        cplx s = approx[i];
        // separate exact duplicates so that the Aberth sums stay finite
        for (std::size_t j = 0; j < i; ++j)
            if (approx[j] == approx[i])
                s += cplx(1e-9, 1e-9) * std::max(1.0, std::abs(s)) * static_cast<double>(i + 1);
        z.push_back({mk(s.real()), mk(s.imag())});
    }

    mpf_class eps(1, bits);
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), bits / 2);
    bool settled = false;
    for (int it = 0; it < 100 && !settled; ++it) {
        settled = true;
        for (std::size_t i = 0; i < n; ++i) {
            mp_cplx pv = horner(coef, z[i]), dv = horner(dcoef, z[i]);
            if (pv.re == 0 && pv.im == 0)
                continue;
            mp_cplx ratio = mp_div(pv, dv, bits);
            mp_cplx sum{mk(0), mk(0)};
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i)
                    continue;
                mp_cplx diff{mpf_class(z[i].re - z[j].re, bits), mpf_class(z[i].im - z[j].im, bits)};
                mp_cplx inv = mp_div({mk(1), mk(0)}, diff, bits);
                sum.re += inv.re;
                sum.im += inv.im;
            }
            mp_cplx rs = mp_mul(ratio, sum, bits);
            mp_cplx den{mpf_class(1 - rs.re, bits), mpf_class(-rs.im, bits)};
            mp_cplx w = mp_div(ratio, den, bits);
            z[i].re -= w.re;
            z[i].im -= w.im;
            mpf_class size = abs(w.re) + abs(w.im);
            mpf_class scale = abs(z[i].re) + abs(z[i].im) + 1;
            if (size > eps * scale)
                settled = false;
        }
    }
    std::vector<cplx> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = {z[i].re.get_d(), z[i].im.get_d()};
        if (!std::isfinite(out[i].real()) || !std::isfinite(out[i].imag()))
            return approx;
    }
    if (!settled)
        return approx;
    if (real) {
        // decide realness on the refined values; the start may have it wrong
        mpf_class tiny(1, bits);
        mpf_div_2exp(tiny.get_mpf_t(), tiny.get_mpf_t(), bits / 3);
        std::vector<int> sign(n);
        for (std::size_t i = 0; i < n; ++i) {
            mpf_class scale = abs(z[i].re) + 1;
            sign[i] = abs(z[i].im) <= tiny * scale ? 0 : sgn(z[i].im);
            if (sign[i] == 0)
                out[i] = out[i].real();
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (sign[i] >= 0)
                continue;
            std::size_t best = i;
            double bd = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < n; ++j)
                if (sign[j] > 0 && std::abs(out[j] - std::conj(out[i])) < bd) {
                    bd = std::abs(out[j] - std::conj(out[i]));
                    best = j;
                }
            if (best != i)
                out[i] = std::conj(out[best]);
        }
    }
    return out;
}

std::vector<root_cluster> cluster_roots(std::span<cplx const> roots, double rel_dist)
{
    std::vector<root_cluster> out;
    std::vector<int> counts;
    std::vector<cplx> sums;
    for (cplx r : roots) {
        bool placed = false;
        for (std::size_t k = 0; k < out.size(); ++k) {
            double scale = std::max(1.0, std::max(std::abs(r), std::abs(out[k].value)));
            if (std::abs(r - out[k].value) <= rel_dist * scale) {
                sums[k] += r;
                counts[k] += 1;
                out[k].value = sums[k] / static_cast<double>(counts[k]);
                out[k].multiplicity = counts[k];
                placed = true;
                break;
            }
        }
        if (!placed) {
            out.push_back({r, 1});
            sums.push_back(r);
            counts.push_back(1);
        }
    }
    return out;
}

/* ---------------------------------------------------------------- */

namespace {

template <class K>
bool is_zero(K const & x)
{
    if constexpr (std::is_same_v<K, rational>)
        return x == 0;
    else
        return x.is_zero();
}

template <class K>
void trim(std::vector<K> & f)
{
    while (!f.empty() && is_zero(f.back()))
        f.pop_back();
}

template <class K>
int deg(std::vector<K> const & f)
{
    return static_cast<int>(f.size()) - 1;
}

template <class K>
std::vector<K> make_monic(std::vector<K> f)
{
    K lc = f.back();
    for (K & x : f)
        x = K(x / lc);
    return f;
}

template <class K>
std::vector<K> derivative(std::vector<K> const & f)
{
    std::vector<K> d;
    for (std::size_t k = 1; k < f.size(); ++k)
        d.push_back(K(f[k] * K(static_cast<long>(k))));
    trim(d);
    return d;
}

template <class K>
std::vector<K> sub(std::vector<K> a, std::vector<K> const & b)
{
    if (a.size() < b.size())
        a.resize(b.size(), K(0));
    for (std::size_t k = 0; k < b.size(); ++k)
        a[k] = K(a[k] - b[k]);
    trim(a);
    return a;
}

/* Polynomial long division; returns {quotient, remainder}. */
template <class K>
std::pair<std::vector<K>, std::vector<K>> divmod(std::vector<K> a, std::vector<K> const & b)
{
    std::vector<K> q;
    trim(a);
    if (deg(a) < deg(b))
        return {q, a};
    q.assign(a.size() - b.size() + 1, K(0));
    K const lb = b.back();
    while (!a.empty() && deg(a) >= deg(b)) {
        std::size_t shift = a.size() - b.size();
        K coef = K(a.back() / lb);
        q[shift] = coef;
        for (std::size_t k = 0; k < b.size(); ++k)
            a[k + shift] = K(a[k + shift] - coef * b[k]);
        a.pop_back();
        trim(a);
    }
    trim(q);
    return {q, a};
}

template <class K>
std::vector<K> poly_gcd(std::vector<K> a, std::vector<K> b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : make_monic(a);
}

template <class K>
std::vector<sqfree_factor<K>> yun(std::vector<K> f)
{
    trim(f);
    if (f.empty())
        throw degenerate_input("square-free decomposition of the zero polynomial");
    std::vector<sqfree_factor<K>> out;
    if (deg(f) == 0)
        return out;
    f = make_monic(f);
    std::vector<K> fp = derivative(f);
    std::vector<K> a0 = poly_gcd(f, fp);
    std::vector<K> b = divmod(f, a0).first;
    std::vector<K> c = divmod(fp, a0).first;
    std::vector<K> d = sub(c, derivative(b));
    int i = 1;
    while (deg(b) > 0) {
        std::vector<K> a = poly_gcd(b, d);
        if (deg(a) > 0)
            out.push_back({a, i});
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = sub(c, derivative(b));
        ++i;
    }
    return out;
}

} // namespace

std::vector<sqfree_factor<rational>> squarefree_decomposition(std::vector<rational> const & f)
{
    return yun(f);
}

std::vector<sqfree_factor<gaussian_rational>>
squarefree_decomposition(std::vector<gaussian_rational> const & f)
{
    return yun(f);
}

} // namespace binform
