#ifndef BINFORM_ARITH_HPP
#define BINFORM_ARITH_HPP

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "binform/error.hpp"

namespace binform {

using integer = mpz_class;
using rational = mpq_class;
using cplx = std::complex<double>;

/* num/den in lowest terms with a positive denominator. Throws
 * degenerate_input when den == 0. */
rational make_rational(integer const & num, integer const & den);

/* Nearest integer to q, ties broken toward zero. */
integer round_half_toward_zero(rational const & q);
/* Nearest integer to x, ties broken toward zero. */
double round_half_toward_zero(double x);

std::size_t bit_length(integer const & x);

/* ------------------------------------------------------------------ */
/* Gaussian integers and Gaussian rationals                            */

struct gaussian_int {
    integer re;
    integer im;

    gaussian_int() = default;
    gaussian_int(integer r, integer i = 0) : re(std::move(r)), im(std::move(i)) {}
    gaussian_int(long r, long i = 0) : re(r), im(i) {}
    gaussian_int(int r, int i = 0) : re(r), im(i) {}

    static gaussian_int unit_i() { return {0, 1}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    cplx to_complex() const { return {re.get_d(), im.get_d()}; }

    gaussian_int & operator+=(gaussian_int const & o);
    gaussian_int & operator-=(gaussian_int const & o);
    gaussian_int & operator*=(gaussian_int const & o);

    friend bool operator==(gaussian_int const & x, gaussian_int const & y)
    {
        return x.re == y.re && x.im == y.im;
    }
};

gaussian_int operator+(gaussian_int x, gaussian_int const & y);
gaussian_int operator-(gaussian_int x, gaussian_int const & y);
gaussian_int operator-(gaussian_int const & x);
gaussian_int operator*(gaussian_int x, gaussian_int const & y);
gaussian_int conj(gaussian_int const & x);
integer norm(gaussian_int const & x);
/* Lexicographic on (re, im); used for deterministic sorting only. */
bool operator<(gaussian_int const & x, gaussian_int const & y);
std::string to_string(gaussian_int const & x);
std::ostream & operator<<(std::ostream & os, gaussian_int const & x);

struct gaussian_rational {
    rational re;
    rational im;

    gaussian_rational() = default;
    gaussian_rational(rational r, rational i = 0) : re(std::move(r)), im(std::move(i)) {}
    gaussian_rational(long r, long i = 0) : re(r), im(i) {}
    gaussian_rational(int r, int i = 0) : re(r), im(i) {}
    gaussian_rational(gaussian_int const & g) : re(g.re), im(g.im) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_integral() const;
    bool is_real_integer() const { return is_real() && is_integral(); }
    /* Requires is_integral(). */
    gaussian_int to_gaussian_int() const;
    cplx to_complex() const { return {re.get_d(), im.get_d()}; }

    friend bool operator==(gaussian_rational const & x, gaussian_rational const & y)
    {
        return x.re == y.re && x.im == y.im;
    }
};

gaussian_rational operator+(gaussian_rational const & x, gaussian_rational const & y);
gaussian_rational operator-(gaussian_rational const & x, gaussian_rational const & y);
gaussian_rational operator-(gaussian_rational const & x);
gaussian_rational operator*(gaussian_rational const & x, gaussian_rational const & y);
/* Throws degenerate_input on division by zero. */
gaussian_rational operator/(gaussian_rational const & x, gaussian_rational const & y);

/* Canonical text form: "3", "-1/2", "i", "-2i", "1-i", "1/2+3/4i". */
std::string to_string(gaussian_rational const & x);
/* Inverse of to_string; also accepts a few non-canonical spellings
 * ("+3", "2i+1", "1+1i"). Throws parse_error. */
gaussian_rational parse_gaussian_rational(std::string const & text);

/* ------------------------------------------------------------------ */
/* 2x2 matrices                                                        */

/* [[a, b], [c, d]]. The ring is the template parameter. */
template <class T>
struct mat2 {
    T a, b, c, d;

    static mat2 identity() { return {T(1), T(0), T(0), T(1)}; }

    friend bool operator==(mat2 const & x, mat2 const & y)
    {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

using int_mat = mat2<integer>;
using gauss_mat = mat2<gaussian_int>;

template <class T>
T det(mat2<T> const & m)
{
    return m.a * m.d - m.b * m.c;
}

template <class T>
mat2<T> mat_mul(mat2<T> const & x, mat2<T> const & y)
{
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

template <class T>
mat2<T> operator*(mat2<T> const & x, mat2<T> const & y)
{
    return mat_mul(x, y);
}

/* Inverse of a determinant-one matrix (the adjugate). Throws domain_error
 * if det != 1. */
int_mat mat_inv(int_mat const & m);
gauss_mat mat_inv(gauss_mat const & m);

/* Equality in PSL2: m == I or m == -I. */
bool is_projective_identity(int_mat const & m);
bool is_projective_identity(gauss_mat const & m);

gauss_mat to_gauss(int_mat const & m);

mat2<cplx> to_complex(int_mat const & m);
mat2<cplx> to_complex(gauss_mat const & m);

std::string to_string(int_mat const & m);
std::string to_string(gauss_mat const & m);

namespace gen {
/* S = [[0,-1],[1,0]], z -> -1/z. */
int_mat S();
/* T^k = [[1,k],[0,1]], z -> z + k. */
int_mat T(integer const & k = 1);
/* [[1,beta],[0,1]] over Z[i]. */
gauss_mat translation(gaussian_int const & beta);
/* diag(i, -i); acts on H3 by (z, t) -> (-z, t). */
gauss_mat rotation();
} // namespace gen

/* ------------------------------------------------------------------ */
/* Dense univariate polynomials and the root finder                    */

/* coeffs[k] is the coefficient of X^k. Trailing (high-degree) zeros are
 * trimmed on construction. */
class poly {
  public:
    poly() = default;
    explicit poly(std::vector<cplx> ascending_coeffs);

    /* From descending coefficients a0 X^n + ... + an. */
    static poly from_descending(std::span<cplx const> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::vector<cplx> const & coeffs() const { return coeffs_; }
    cplx leading() const { return coeffs_.back(); }

    cplx operator()(cplx x) const;
    /* Sum |c_k| |x|^k, the scale against which residuals are measured. */
    double scale_at(double abs_x) const;
    poly derivative() const;

    /* Monic product of (X - r) times lead. */
    static poly from_roots(std::span<cplx const> roots, cplx lead = 1.0);

  private:
    std::vector<cplx> coeffs_;
};

struct root_finder_options {
    double tol = 1e-13;
    int max_iterations = 500;
};

/* All roots, with multiplicity, of p by Aberth-Ehrlich iteration. Roots at
 * exactly zero (vanishing low-order coefficients) are split off first.
 * Real-coefficient input returns a conjugate-closed list.
 * Throws degenerate_input (degree < 1, vanishing leading coefficient) or
 * non_convergence. */
std::vector<cplx> find_roots(poly const & p, root_finder_options const & opt = {});
std::vector<cplx> find_roots(poly const & p, double tol);

/* Aberth iteration in bits-bit floating point started from approx, for a
 * polynomial with exact coefficients and simple roots. Real input keeps
 * real roots real and pairs conjugate. approx is returned unchanged if the
 * iteration does not settle. */
std::vector<cplx> refine_roots(std::vector<gaussian_rational> const & ascending, std::vector<cplx> const & approx,
                               unsigned bits = 320);

struct root_cluster {
    cplx value;
    int multiplicity;
};

/* Groups roots lying within rel_dist * max(1, |root|) of each other. */
std::vector<root_cluster> cluster_roots(std::span<cplx const> roots, double rel_dist = 1e-7);

/* ------------------------------------------------------------------ */
/* Exact square-free decomposition (Yun) over Q and Q(i)               */

template <class K>
struct sqfree_factor {
    std::vector<K> coeffs; // ascending, monic
    int multiplicity;
};

/* Input in ascending order, non-zero. Returns monic pairwise-coprime
 * square-free factors g_i with f = lc * prod g_i^{m_i}. */
std::vector<sqfree_factor<rational>> squarefree_decomposition(std::vector<rational> const & f);
std::vector<sqfree_factor<gaussian_rational>>
squarefree_decomposition(std::vector<gaussian_rational> const & f);

} // namespace binform

#endif
