#include "binform/julia.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace binform {

namespace {

template <class T>
std::vector<T> poly_mul(std::vector<T> const & x, std::vector<T> const & y)
{
    std::vector<T> out(x.size() + y.size() - 1, T(0));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            out[i + j] += x[i] * y[j];
    return out;
}

/* Coefficients (descending) of sum a_i (aX + b)^(n-i) (cX + d)^i. */
template <class T>
std::vector<T> act_coeffs(mat2<T> const & m, std::vector<T> const & f)
{
    std::size_t const n = f.size() - 1;
    std::vector<std::vector<T>> p1(n + 1), p2(n + 1);
    p1[0] = p2[0] = {T(1)};
    for (std::size_t k = 1; k <= n; ++k) {
        p1[k] = poly_mul(p1[k - 1], std::vector<T>{m.b, m.a});
        p2[k] = poly_mul(p2[k - 1], std::vector<T>{m.d, m.c});
    }
    std::vector<T> out(n + 1, T(0));
    for (std::size_t i = 0; i <= n; ++i) {
        std::vector<T> p = poly_mul(p1[n - i], p2[i]);
        for (std::size_t k = 0; k < p.size(); ++k)
            out[n - k] += f[i] * p[k];
    }
    return out;
}

template <class T>
std::string join(std::vector<T> const & c, auto str)
{
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            out += ",";
        out += str(c[i]);
    }
    return out;
}

} // namespace

binary_form to_complex(int_binary_form const & f)
{
    binary_form out;
    for (auto const & c : f.coeffs)
        out.coeffs.push_back(c.get_d());
    return out;
}

binary_form to_complex(gauss_binary_form const & f)
{
    binary_form out;
    for (auto const & c : f.coeffs)
        out.coeffs.push_back(c.to_complex());
    return out;
}

std::string to_string(int_binary_form const & f)
{
    return join(f.coeffs, [](integer const & x) { return x.get_str(); });
}

std::string to_string(gauss_binary_form const & f)
{
    return join(f.coeffs, [](gaussian_int const & x) { return to_string(x); });
}

bool is_real(binary_form const & f)
{
    return std::all_of(f.coeffs.begin(), f.coeffs.end(), [](cplx z) { return z.imag() == 0.0; });
}

binary_form act_form(mat2<cplx> const & m, binary_form const & f)
{
    return {act_coeffs(m, f.coeffs)};
}

int_binary_form act_form(int_mat const & m, int_binary_form const & f)
{
    return {act_coeffs(m, f.coeffs)};
}

gauss_binary_form act_form(gauss_mat const & m, gauss_binary_form const & f)
{
    return {act_coeffs(m, f.coeffs)};
}

integer naive_height(int_binary_form const & f)
{
    integer h = 0;
    for (auto const & c : f.coeffs)
        h = std::max(h, integer(abs(c)));
    return h;
}

/* ---------------------------------------------------------------- */
/* Root profiles                                                     */

int root_profile::max_multiplicity() const
{
    int m = infinity_multiplicity;
    for (int k : multiplicity)
        m = std::max(m, k);
    return m;
}

std::vector<cplx> root_profile::flat_roots() const
{
    std::vector<cplx> out;
    for (std::size_t j = 0; j < roots.size(); ++j)
        out.insert(out.end(), static_cast<std::size_t>(multiplicity[j]), roots[j]);
    return out;
}

namespace {

void count_real(root_profile & p)
{
    if (!p.real)
        return;
    int real_roots = p.infinity_multiplicity;
    for (std::size_t j = 0; j < p.roots.size(); ++j) {
        cplx z = p.roots[j];
        if (std::fabs(z.imag()) <= 1e-12 * std::max(1.0, std::abs(z)))
            real_roots += p.multiplicity[j];
    }
    p.r = real_roots;
    p.s = (p.degree - real_roots) / 2;
}

template <class T>
std::size_t leading_zeros(std::vector<T> const & c, auto is_zero)
{
    std::size_t k = 0;
    while (k < c.size() && is_zero(c[k]))
        ++k;
    if (k == c.size())
        throw degenerate_input("zero form");
    return k;
}

template <class K>
void add_exact_roots(root_profile & p, std::vector<sqfree_factor<K>> const & factors, auto to_c)
{
    for (auto const & fac : factors) {
        std::vector<cplx> c;
        for (auto const & x : fac.coeffs)
            c.push_back(to_c(x));
        poly q(c);
        if (q.degree() < 1)
            continue;
        std::vector<cplx> rs;
        if (q.degree() == 1) {
            rs = {-c[0] / c[1]};
        } else {
            std::vector<gaussian_rational> exact;
            for (auto const & x : fac.coeffs)
                exact.push_back(gaussian_rational(x));
            rs = refine_roots(exact, find_roots(q));
        }
        for (cplx r : rs) {
            p.roots.push_back(r);
            p.multiplicity.push_back(fac.multiplicity);
        }
    }
}

} // namespace

root_profile profile_roots(binary_form const & f, double rel_dist)
{
    root_profile p;
    p.degree = f.degree();
    p.real = is_real(f);
    std::size_t k = leading_zeros(f.coeffs, [](cplx z) { return z == cplx(0.0); });
    p.infinity_multiplicity = static_cast<int>(k);
    if (k + 1 < f.coeffs.size()) {
        std::vector<cplx> rest(f.coeffs.begin() + static_cast<std::ptrdiff_t>(k), f.coeffs.end());
        std::vector<cplx> rs = find_roots(poly::from_descending(rest));
        for (auto const & cl : cluster_roots(rs, rel_dist)) {
            p.roots.push_back(p.real && std::fabs(cl.value.imag()) <= rel_dist * std::max(1.0, std::abs(cl.value))
                                  ? cplx(cl.value.real())
                                  : cl.value);
            p.multiplicity.push_back(cl.multiplicity);
        }
    }
    count_real(p);
    return p;
}

root_profile profile_roots(int_binary_form const & f)
{
    root_profile p;
    p.degree = f.degree();
    p.real = true;
    std::size_t k = leading_zeros(f.coeffs, [](integer const & x) { return x == 0; });
    p.infinity_multiplicity = static_cast<int>(k);
    if (k + 1 < f.coeffs.size()) {
        std::vector<rational> asc;
        for (std::size_t i = f.coeffs.size(); i-- > k;)
            asc.push_back(rational(f.coeffs[i]));
        add_exact_roots(p, squarefree_decomposition(asc), [](rational const & x) { return cplx(x.get_d()); });
    }
    count_real(p);
    return p;
}

root_profile profile_roots(gauss_binary_form const & f)
{
    root_profile p;
    p.degree = f.degree();
    p.real = std::all_of(f.coeffs.begin(), f.coeffs.end(), [](gaussian_int const & x) { return x.im == 0; });
    std::size_t k = leading_zeros(f.coeffs, [](gaussian_int const & x) { return x.is_zero(); });
    p.infinity_multiplicity = static_cast<int>(k);
    if (k + 1 < f.coeffs.size()) {
        std::vector<gaussian_rational> asc;
        for (std::size_t i = f.coeffs.size(); i-- > k;)
            asc.push_back(gaussian_rational(f.coeffs[i]));
        add_exact_roots(p, squarefree_decomposition(asc),
                        [](gaussian_rational const & x) { return x.to_complex(); });
    }
    count_real(p);
    return p;
}

bool is_stable(root_profile const & p)
{
    if (p.degree < 3)
        throw degree_too_small("stability needs degree >= 3");
    return 2 * p.max_multiplicity() < p.degree;
}

bool is_stable(binary_form const & f)
{
    if (f.degree() < 3)
        throw degree_too_small("stability needs degree >= 3");
    return is_stable(profile_roots(f));
}

bool is_stable(int_binary_form const & f)
{
    if (f.degree() < 3)
        throw degree_too_small("stability needs degree >= 3");
    return is_stable(profile_roots(f));
}

bool is_stable(gauss_binary_form const & f)
{
    if (f.degree() < 3)
        throw degree_too_small("stability needs degree >= 3");
    return is_stable(profile_roots(f));
}

/* ---------------------------------------------------------------- */
/* Q0                                                                */

complex_herm_form q0_covariant(root_profile const & p, std::vector<cplx> const & descending)
{
    int const n = p.degree;
    if (n < 3)
        throw degree_too_small("Q0 needs degree >= 3");
    if (!p.all_simple())
        throw repeated_root("Q0 needs simple roots");
    std::size_t k = static_cast<std::size_t>(p.infinity_multiplicity);
    std::vector<cplx> rest(descending.begin() + static_cast<std::ptrdiff_t>(k), descending.end());
    double const e = -2.0 / (n - 2);
    double a = 0.0, c = 0.0;
    cplx b = 0.0;
    for (std::size_t i = 0; i < p.roots.size(); ++i) {
        cplx al = p.roots[i];
        // f'(alpha) from the factored form; evaluating df loses digits on clustered roots
        cplx prod = rest.front();
        for (std::size_t j = 0; j < p.roots.size(); ++j)
            if (j != i)
                prod *= al - p.roots[j];
        double d = std::abs(prod);
        double w = std::pow(d, e);
        if (!(d > 0) || !std::isfinite(w))
            throw repeated_root("f'(alpha) vanishes");
        a += w;
        b -= w * al;
        c += w * std::norm(al);
    }
    if (k == 1)
        c += std::pow(std::abs(rest.front()), e);
    return {a, b, c};
}

complex_herm_form q0_covariant(binary_form const & f)
{
    if (f.degree() < 3)
        throw degree_too_small("Q0 needs degree >= 3");
    return q0_covariant(profile_roots(f), f.coeffs);
}

real_quad_form q0_covariant_real(binary_form const & f)
{
    if (!is_real(f))
        throw domain_error("real Q0 needs real coefficients");
    complex_herm_form h = q0_covariant(f);
    return {h.a, 2 * h.b.real(), h.c};
}

/* ---------------------------------------------------------------- */
/* Critical point of sum m_j log(|t - alpha_j|^2 + u^2) - n log u    */

namespace {

struct potential {
    std::vector<cplx> roots;
    std::vector<int> mult;
    int n;
    bool real; // y is pinned to 0

    int dim() const { return real ? 2 : 3; }

    // v = (x, s) or (x, y, s), u = exp(s)
    void unpack(std::vector<double> const & v, double & x, double & y, double & s) const
    {
        x = v[0];
        y = real ? 0.0 : v[1];
        s = v.back();
    }

    double value(std::vector<double> const & v) const
    {
        double x, y, s;
        unpack(v, x, y, s);
        double u2 = std::exp(2 * s);
        double phi = -n * s;
        for (std::size_t j = 0; j < roots.size(); ++j) {
            double dx = x - roots[j].real(), dy = y - roots[j].imag();
            phi += mult[j] * std::log(dx * dx + dy * dy + u2);
        }
        return phi;
    }

    /* Gradient and Hessian in (x, y, s); the real case drops y. */
    void derivatives(std::vector<double> const & v, std::vector<double> & g, std::vector<double> & h) const
    {
        double x, y, s;
        unpack(v, x, y, s);
        double u2 = std::exp(2 * s);
        double gx = 0, gy = 0, gs = -n;
        double hxx = 0, hxy = 0, hxs = 0, hyy = 0, hys = 0, hss = 0;
        for (std::size_t j = 0; j < roots.size(); ++j) {
            double m = mult[j];
            double dx = x - roots[j].real(), dy = y - roots[j].imag();
            double d = dx * dx + dy * dy;
            double D = d + u2;
            double D2 = D * D;
            gx += m * 2 * dx / D;
            gy += m * 2 * dy / D;
            gs += m * 2 * u2 / D;
            hxx += m * (2 / D - 4 * dx * dx / D2);
            hyy += m * (2 / D - 4 * dy * dy / D2);
            hxy += m * (-4 * dx * dy / D2);
            hxs += m * (-4 * u2 * dx / D2);
            hys += m * (-4 * u2 * dy / D2);
            hss += m * (4 * u2 * d / D2);
        }
        if (real) {
            g = {gx, gs};
            h = {hxx, hxs, hxs, hss};
        } else {
            g = {gx, gy, gs};
            h = {hxx, hxy, hxs, hxy, hyy, hys, hxs, hys, hss};
        }
    }

    /* max(|sum u^2/D - n/2|, u |sum (t - alpha)/D|) */
    double residual(std::vector<double> const & v) const
    {
        double x, y, s;
        unpack(v, x, y, s);
        double u2 = std::exp(2 * s);
        double r1 = -0.5 * n;
        cplx r2 = 0.0;
        cplx t(x, y);
        for (std::size_t j = 0; j < roots.size(); ++j) {
            double D = std::norm(t - roots[j]) + u2;
            r1 += mult[j] * u2 / D;
            r2 += static_cast<double>(mult[j]) * (t - roots[j]) / D;
        }
        return std::max(std::fabs(r1), std::sqrt(u2) * std::abs(r2));
    }
};

/* Cholesky solve of (H + lambda I) p = -g; false if not positive definite. */
bool cholesky_solve(std::vector<double> h, std::vector<double> const & g, double lambda, std::vector<double> & p)
{
    int const k = static_cast<int>(g.size());
    for (int i = 0; i < k; ++i)
        h[i * k + i] += lambda;
    std::vector<double> L(k * k, 0.0);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j <= i; ++j) {
            double sum = h[i * k + j];
            for (int q = 0; q < j; ++q)
                sum -= L[i * k + q] * L[j * k + q];
            if (i == j) {
                if (!(sum > 0))
                    return false;
                L[i * k + i] = std::sqrt(sum);
            } else {
                L[i * k + j] = sum / L[j * k + j];
            }
        }
    }
    std::vector<double> y(k);
    for (int i = 0; i < k; ++i) {
        double sum = -g[i];
        for (int q = 0; q < i; ++q)
            sum -= L[i * k + q] * y[q];
        y[i] = sum / L[i * k + i];
    }
    p.assign(k, 0.0);
    for (int i = k - 1; i >= 0; --i) {
        double sum = y[i];
        for (int q = i + 1; q < k; ++q)
            sum -= L[q * k + i] * p[q];
        p[i] = sum / L[i * k + i];
    }
    return true;
}

bool newton(potential const & pot, std::vector<double> & v, int max_iter)
{
    std::vector<double> g, h, p;
    for (int it = 0; it < max_iter; ++it) {
        if (pot.residual(v) <= julia_residual_tol)
            return true;
        pot.derivatives(v, g, h);
        double hmax = 0;
        for (double x : h)
            hmax = std::max(hmax, std::fabs(x));
        double lambda = 0.0;
        while (!cholesky_solve(h, g, lambda, p)) {
            lambda = lambda == 0.0 ? 1e-10 * std::max(hmax, 1.0) : 10 * lambda;
            if (lambda > 1e12 * std::max(hmax, 1.0))
                return false;
        }
        double slope = 0;
        for (std::size_t i = 0; i < g.size(); ++i)
            slope += g[i] * p[i];
        double f0 = pot.value(v);
        double step = 1.0;
        std::vector<double> trial(v.size());
        bool moved = false;
        while (step > 1e-14) {
            for (std::size_t i = 0; i < v.size(); ++i)
                trial[i] = v[i] + step * p[i];
            double f1 = pot.value(trial);
            if (std::isfinite(f1) && f1 <= f0 + 1e-4 * step * slope + 1e-14 * std::fabs(f0)) {
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved)
            return pot.residual(v) <= julia_residual_tol;
        v = trial;
    }
    return pot.residual(v) <= julia_residual_tol;
}

/* Golden-section line minimization along each coordinate in turn. */
void coordinate_descent(potential const & pot, std::vector<double> & v, int sweeps)
{
    double const phi = (std::sqrt(5.0) - 1) / 2;
    for (int sw = 0; sw < sweeps; ++sw) {
        double before = pot.value(v);
        for (std::size_t i = 0; i < v.size(); ++i) {
            double width = i + 1 == v.size() ? 2.0 : std::max(1.0, std::exp(v.back()));
            double lo = v[i] - width, hi = v[i] + width;
            auto at = [&](double x) {
                std::vector<double> w = v;
                w[i] = x;
                return pot.value(w);
            };
            double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
            double f1 = at(x1), f2 = at(x2);
            for (int it = 0; it < 80; ++it) {
                if (f1 < f2) {
                    hi = x2;
                    x2 = x1;
                    f2 = f1;
                    x1 = hi - phi * (hi - lo);
                    f1 = at(x1);
                } else {
                    lo = x1;
                    x1 = x2;
                    f1 = f2;
                    x2 = lo + phi * (hi - lo);
                    f2 = at(x2);
                }
            }
            double xm = 0.5 * (lo + hi);
            if (at(xm) < at(v[i]))
                v[i] = xm;
        }
        if (std::fabs(before - pot.value(v)) <= 1e-15 * std::max(1.0, std::fabs(before)))
            break;
    }
}

double log_theta_unified(root_profile const & p, cplx lead, std::vector<double> const & w, double disc)
{
    int const n = p.degree;
    double lw = 0;
    for (double x : w)
        lw += std::log(x);
    return 2 * std::log(std::abs(lead)) + 0.5 * n * std::log(disc) - n * std::log(static_cast<double>(n)) - lw;
}

/* Weights and the quadratic at the critical point (t, u). */
void assemble(julia_data & j, cplx lead)
{
    root_profile const & p = j.profile;
    int const n = p.degree;
    double const u2 = j.u * j.u;
    j.weights.clear();
    double a = 0, c = 0;
    cplx b = 0;
    for (std::size_t k = 0; k < p.roots.size(); ++k) {
        double w = (2.0 / n) * u2 / (std::norm(j.t - p.roots[k]) + u2);
        for (int m = 0; m < p.multiplicity[k]; ++m) {
            j.weights.push_back(w);
            a += w;
            b -= w * p.roots[k];
            c += w * std::norm(p.roots[k]);
        }
    }
    for (int m = 0; m < p.infinity_multiplicity; ++m) {
        double w = (2.0 / n) * u2;
        j.weights.push_back(w);
        c += w;
    }
    if (p.real)
        b = b.real();
    j.julia_herm = {a, b, c};
    double disc = discriminant(j.julia_herm);
    if (!(a > 0) || !(disc > 0))
        throw solver_diverged("Julia quadratic is not positive definite");
    if (p.real)
        j.julia_quad = {a, 2 * b.real(), c};
    j.theta0_unified = std::exp(log_theta_unified(p, lead, j.weights, disc));
    j.theta0 = p.real ? j.theta0_unified * theta0_normalization_ratio(n) : j.theta0_unified;
}

} // namespace

double theta0_normalization_ratio(int n)
{
    return std::pow(2.0 * n, n);
}

double theta0_for_weights(root_profile const & p, cplx lead, std::vector<double> const & weights)
{
    std::vector<cplx> flat = p.flat_roots();
    if (weights.size() != flat.size() + static_cast<std::size_t>(p.infinity_multiplicity))
        throw domain_error("weight count does not match the roots");
    double a = 0, c = 0;
    cplx b = 0;
    for (std::size_t k = 0; k < flat.size(); ++k) {
        a += weights[k];
        b -= weights[k] * flat[k];
        c += weights[k] * std::norm(flat[k]);
    }
    for (std::size_t k = flat.size(); k < weights.size(); ++k)
        c += weights[k];
    double disc = a * c - std::norm(b);
    return std::exp(log_theta_unified(p, lead, weights, disc));
}

julia_data julia_covariant(root_profile const & p, cplx lead)
{
    int const n = p.degree;
    julia_data j;
    j.profile = p;

    if (n == 2) {
        bool definite = p.real && p.infinity_multiplicity == 0 && p.roots.size() == 2 &&
                        p.roots[0].imag() != 0.0 && lead.real() > 0;
        if (!definite)
            throw policy_not_applicable("degree 2 needs a real positive definite form");
        cplx al = p.roots[0].imag() > 0 ? p.roots[0] : p.roots[1];
        j.t = al.real();
        j.u = al.imag();
        j.residual = 0;
        j.solver_path = "quadratic";
        assemble(j, lead);
        double l = lead.real();
        j.julia_herm = {l, cplx(-l * al.real()), l * std::norm(al)};
        j.julia_quad = {l, -2 * l * al.real(), l * std::norm(al)};
        return j;
    }
    if (n < 2)
        throw degree_too_small("Julia covariant needs degree >= 2");
    if (!is_stable(p))
        throw not_stable("form has a root of multiplicity >= n/2");
    int mm = p.max_multiplicity();
    if (mm >= 2 && mm == (n - 1) / 2)
        j.warnings.push_back("barely stable: root multiplicity " + std::to_string(mm));

    potential pot{p.roots, p.multiplicity, n, p.real};

    // seed
    double x0 = 0, y0 = 0, u0 = 1;
    bool seeded = false;
    if (p.all_simple()) {
        try {
            std::vector<cplx> desc; // rebuild F from roots for Q0
            poly f = poly::from_roots(p.roots, lead);
            for (int k = f.degree(); k >= 0; --k)
                desc.push_back(f.coeffs()[static_cast<std::size_t>(k)]);
            desc.insert(desc.begin(), static_cast<std::size_t>(p.infinity_multiplicity), cplx(0.0));
            complex_herm_form q = q0_covariant(p, desc);
            double disc = discriminant(q);
            if (q.a > 0 && disc > 0) {
                cplx z = -q.b / q.a;
                x0 = z.real();
                y0 = p.real ? 0.0 : z.imag();
                u0 = std::sqrt(disc) / q.a;
                seeded = std::isfinite(x0) && std::isfinite(y0) && std::isfinite(u0) && u0 > 0;
            }
        } catch (error const &) {
            seeded = false;
        }
    }
    if (!seeded) {
        std::vector<cplx> flat = p.flat_roots();
        cplx mean = 0;
        for (cplx r : flat)
            mean += r;
        mean /= static_cast<double>(flat.size());
        double spread = 0;
        for (cplx r : flat)
            spread += std::norm(r - mean);
        x0 = mean.real();
        y0 = p.real ? 0.0 : mean.imag();
        u0 = std::sqrt(spread / flat.size()) + 1.0;
    }
    std::vector<double> v = p.real ? std::vector<double>{x0, std::log(u0)} : std::vector<double>{x0, y0, std::log(u0)};

    j.solver_path = "newton";
    if (!newton(pot, v, 200)) {
        j.solver_path = "newton+descent";
        coordinate_descent(pot, v, 200);
        if (!newton(pot, v, 200))
            throw solver_diverged("critical point residual " + std::to_string(pot.residual(v)));
    }
    j.t = p.real ? cplx(v[0], 0.0) : cplx(v[0], v[1]);
    j.u = std::exp(v.back());
    j.residual = pot.residual(v);
    assemble(j, lead);
    return j;
}

namespace {

template <class T>
cplx first_nonzero(std::vector<T> const & c, auto conv)
{
    for (auto const & x : c) {
        cplx z = conv(x);
        if (z != cplx(0.0))
            return z;
    }
    throw degenerate_input("zero form");
}

} // namespace

julia_data julia_covariant(binary_form const & f)
{
    return julia_covariant(profile_roots(f), first_nonzero(f.coeffs, [](cplx z) { return z; }));
}

julia_data julia_covariant(int_binary_form const & f)
{
    return julia_covariant(profile_roots(f), first_nonzero(f.coeffs, [](integer const & x) { return cplx(x.get_d()); }));
}

julia_data julia_covariant(gauss_binary_form const & f)
{
    return julia_covariant(profile_roots(f),
                           first_nonzero(f.coeffs, [](gaussian_int const & x) { return x.to_complex(); }));
}

/* ---------------------------------------------------------------- */
/* Stoll-Cremona                                                     */

namespace {

/* Walks the point into the standard domain, applying the inverse of each
 * point move to the form. Returns the number of moves. */
int steer_h2(h2_point p, int_binary_form & form, int_mat & acc)
{
    double const tol = default_domain_tol;
    int moves = 0;
    int_mat const s_inv = mat_inv(gen::S());
    for (int round = 0; round < point_reduction_guard; ++round) {
        if (std::fabs(p.x) > 0.5 + tol) {
            integer m(round_half_toward_zero(p.x));
            p = mobius_h2(gen::T(integer(-m)), p);
            int_mat t = gen::T(m);
            form = act_form(t, form);
            acc = acc * t;
            ++moves;
            continue;
        }
        if (std::hypot(p.x, p.y) < 1.0 - tol) {
            p = mobius_h2(gen::S(), p);
            form = act_form(s_inv, form);
            acc = acc * s_inv;
            ++moves;
            continue;
        }
        return moves;
    }
    throw non_termination("Stoll-Cremona point guard exceeded");
}

int steer_h3(h3_point p, gauss_binary_form & form, gauss_mat & acc)
{
    double const tol = default_domain_tol;
    int moves = 0;
    gauss_mat const s = to_gauss(gen::S());
    gauss_mat const s_inv = mat_inv(s);
    gauss_mat const rot_inv = mat_inv(gen::rotation());
    for (int round = 0; round < point_reduction_guard; ++round) {
        double x = p.z.real(), y = p.z.imag();
        if (std::fabs(x) > 0.5 + tol || std::fabs(y) > 0.5 + tol) {
            double mx = std::fabs(x) > 0.5 + tol ? round_half_toward_zero(x) : 0.0;
            double my = std::fabs(y) > 0.5 + tol ? round_half_toward_zero(y) : 0.0;
            gaussian_int beta{integer(mx), integer(my)};
            p = mobius_h3(gen::translation(-beta), p);
            gauss_mat t = gen::translation(beta);
            form = act_form(t, form);
            acc = acc * t;
            ++moves;
            continue;
        }
        if (y < -tol) {
            p = mobius_h3(gen::rotation(), p);
            form = act_form(rot_inv, form);
            acc = acc * rot_inv;
            ++moves;
            continue;
        }
        if (std::norm(p.z) + p.t * p.t < (1.0 - tol) * (1.0 - tol)) {
            p = mobius_h3(s, p);
            form = act_form(s_inv, form);
            acc = acc * s_inv;
            ++moves;
            continue;
        }
        return moves;
    }
    throw non_termination("Stoll-Cremona point guard exceeded");
}

} // namespace

sc_reduction stoll_cremona_reduce(int_binary_form const & f)
{
    if (f.degree() < 3)
        throw degree_too_small("Stoll-Cremona reduction needs degree >= 3");
    root_profile p = profile_roots(f);
    if (!is_stable(p))
        throw not_stable("form has a root of multiplicity >= n/2");

    sc_reduction out{f, int_mat::identity(), 0, 0, julia_covariant(f)};
    if (in_F_h2(out.julia.point_h2()) != membership::outside)
        return out;

    if (p.all_simple()) {
        complex_herm_form q = q0_covariant(p, to_complex(f).coeffs);
        h2_point z0(-q.b.real() / q.a, std::sqrt(discriminant(q)) / q.a);
        out.q0_moves = steer_h2(z0, out.form, out.transform);
    }
    for (int round = 0; round < point_reduction_guard; ++round) {
        out.julia = julia_covariant(out.form);
        if (in_F_h2(out.julia.point_h2()) != membership::outside)
            return out;
        int moves = steer_h2(out.julia.point_h2(), out.form, out.transform);
        out.julia_moves += moves;
        if (moves == 0)
            throw non_termination("Julia point does not settle in the domain");
    }
    throw non_termination("Stoll-Cremona guard exceeded");
}

sc_reduction_gauss stoll_cremona_reduce(gauss_binary_form const & f)
{
    if (f.degree() < 3)
        throw degree_too_small("Stoll-Cremona reduction needs degree >= 3");
    root_profile p = profile_roots(f);
    if (!is_stable(p))
        throw not_stable("form has a root of multiplicity >= n/2");

    sc_reduction_gauss out{f, gauss_mat::identity(), 0, 0, julia_covariant(f)};
    if (in_F_h3_Qi(out.julia.point_h3()) != membership::outside)
        return out;

    if (p.all_simple()) {
        complex_herm_form q = q0_covariant(p, to_complex(f).coeffs);
        h3_point z0(-q.b / q.a, std::sqrt(discriminant(q)) / q.a);
        out.q0_moves = steer_h3(z0, out.form, out.transform);
    }
    for (int round = 0; round < point_reduction_guard; ++round) {
        out.julia = julia_covariant(out.form);
        if (in_F_h3_Qi(out.julia.point_h3()) != membership::outside)
            return out;
        int moves = steer_h3(out.julia.point_h3(), out.form, out.transform);
        out.julia_moves += moves;
        if (moves == 0)
            throw non_termination("Julia point does not settle in the domain");
    }
    throw non_termination("Stoll-Cremona guard exceeded");
}

/* ---------------------------------------------------------------- */

bounds_report julia_bounds_check(julia_data const & j, std::vector<cplx> const & descending)
{
    int const n = j.profile.degree;
    bounds_report r{};
    r.theta0 = j.theta0_unified * theta0_normalization_ratio(n);
    r.lead = std::abs(descending.front());
    r.lead_bound = r.theta0 / (std::pow(3.0, 0.5 * n) * std::pow(static_cast<double>(n), n));
    r.lead_ok = r.lead <= r.lead_bound * (1 + 1e-9);
    r.point_in_domain = j.profile.real ? in_F_h2(j.point_h2()) != membership::outside
                                       : in_F_h3_Qi(j.point_h3()) != membership::outside;
    if (r.lead == 0.0) {
        r.roots_vacuous = true;
        r.roots_ok = true;
        r.max_root_sq = std::numeric_limits<double>::infinity();
        r.root_bound = std::numeric_limits<double>::infinity();
        return r;
    }
    r.max_root_sq = 0;
    for (cplx al : j.profile.roots)
        r.max_root_sq = std::max(r.max_root_sq, std::norm(al));
    r.root_bound = r.theta0 / (std::pow(n - 1.0, n - 1) * std::pow(3.0, 0.5 * n) * r.lead * r.lead);
    r.roots_ok = r.max_root_sq <= r.root_bound * (1 + 1e-9);
    return r;
}

bounds_report julia_bounds_check(binary_form const & f)
{
    julia_data j = julia_covariant(f);
    bool outside = j.profile.real ? in_F_h2(j.point_h2()) == membership::outside
                                  : in_F_h3_Qi(j.point_h3()) == membership::outside;
    if (!outside)
        return julia_bounds_check(j, f.coeffs);
    mat2<cplx> m = j.profile.real ? to_complex(mat_inv(reduce_point_h2(j.point_h2()).transform))
                                  : to_complex(mat_inv(reduce_point_h3_Qi(j.point_h3()).transform));
    binary_form g = act_form(m, f);
    bounds_report r = julia_bounds_check(julia_covariant(g), g.coeffs);
    r.reduced_first = true;
    return r;
}

} // namespace binform
