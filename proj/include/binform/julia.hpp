#ifndef BINFORM_JULIA_HPP
#define BINFORM_JULIA_HPP

#include <string>
#include <vector>

#include "binform/arith.hpp"
#include "binform/halfplane.hpp"
#include "binform/hermforms.hpp"
#include "binform/quadforms.hpp"

namespace binform {

/* F(X,Z) = a0 X^n + a1 X^(n-1) Z + ... + an Z^n, coefficients descending. */
template <class T>
struct basic_binary_form {
    std::vector<T> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    friend bool operator==(basic_binary_form const &, basic_binary_form const &) = default;
};

using binary_form = basic_binary_form<cplx>;
using int_binary_form = basic_binary_form<integer>;
using gauss_binary_form = basic_binary_form<gaussian_int>;

binary_form to_complex(int_binary_form const & f);
binary_form to_complex(gauss_binary_form const & f);
std::string to_string(int_binary_form const & f);
std::string to_string(gauss_binary_form const & f);
bool is_real(binary_form const & f);

/* F(aX + bZ, cX + dZ). Exact on the integral types. */
binary_form act_form(mat2<cplx> const & m, binary_form const & f);
int_binary_form act_form(int_mat const & m, int_binary_form const & f);
gauss_binary_form act_form(gauss_mat const & m, gauss_binary_form const & f);

/* max |a_i| */
integer naive_height(int_binary_form const & f);

/* Distinct roots of F with multiplicities. A root at infinity (a0 = 0) is
 * kept apart in infinity_multiplicity. */
struct root_profile {
    int degree = 0;
    std::vector<cplx> roots;
    std::vector<int> multiplicity;
    int infinity_multiplicity = 0;
    bool real = false;
    int r = 0; // real roots, with multiplicity (the root at infinity included)
    int s = 0; // conjugate pairs, with multiplicity

    int max_multiplicity() const;
    bool all_simple() const { return max_multiplicity() <= 1; }
    /* Finite roots repeated by multiplicity. */
    std::vector<cplx> flat_roots() const;
};

/* Floating input: roots clustered within rel_dist. */
root_profile profile_roots(binary_form const & f, double rel_dist = 1e-7);
/* Exact input: multiplicities from the square-free decomposition. */
root_profile profile_roots(int_binary_form const & f);
root_profile profile_roots(gauss_binary_form const & f);

/* No root of multiplicity >= n/2. Throws degree_too_small for n < 3. */
bool is_stable(root_profile const & p);
bool is_stable(binary_form const & f);
bool is_stable(int_binary_form const & f);
bool is_stable(gauss_binary_form const & f);

/* Sum over roots of |X - conj(alpha) Z|^2 / |f'(alpha)|^(2/(n-2)), f = F(X,1);
 * a simple root at infinity adds |Z|^2 / |a1|^(2/(n-2)). Hermitian form with
 * b = -sum w alpha. Throws degree_too_small, repeated_root. */
complex_herm_form q0_covariant(binary_form const & f);
complex_herm_form q0_covariant(root_profile const & p, std::vector<cplx> const & descending);
/* Real quadratic [A, 2 Re b, C] of the same form; requires real input. */
real_quad_form q0_covariant_real(binary_form const & f);

inline constexpr double julia_residual_tol = 1e-11;

struct julia_data {
    root_profile profile;
    /* One weight per finite root, repeated by multiplicity, then one per
     * copy of the root at infinity. */
    std::vector<double> weights;
    cplx t;   // critical point (t, u); t is real for real forms
    double u; //
    double theta0;          // a0^2 (4AC - B^2)^(n/2) / prod w on real forms
    double theta0_unified;  // |a0|^2 disc^(n/2) / (n^n prod w)
    complex_herm_form julia_herm;
    real_quad_form julia_quad{0, 0, 0}; // real forms only
    double residual;
    std::string solver_path;
    std::vector<std::string> warnings;

    h2_point point_h2() const { return {t.real(), u}; }
    h3_point point_h3() const { return {t, u}; }
};

/* Solves sum u^2/D_j = n/2, sum (t - alpha_j)/D_j = 0 with
 * D_j = |t - alpha_j|^2 + u^2, sets w_j = (2/n) u^2 / D_j and assembles
 * J_f = sum w_j |X - conj(alpha_j) Z|^2 (+ (2/n) u^2 |Z|^2 per root at
 * infinity). For n = 2 a real positive definite f is its own quadratic.
 * Throws not_stable, solver_diverged, policy_not_applicable. */
julia_data julia_covariant(binary_form const & f);
julia_data julia_covariant(int_binary_form const & f);
julia_data julia_covariant(gauss_binary_form const & f);
julia_data julia_covariant(root_profile const & p, cplx lead);

/* theta_0 of the quadratic sum w_j |X - conj(alpha_j) Z|^2 (unified
 * normalization) for arbitrary positive weights, ordered as in
 * julia_data::weights. */
double theta0_for_weights(root_profile const & p, cplx lead, std::vector<double> const & weights);

/* theta0 / theta0_unified on real input. */
double theta0_normalization_ratio(int n);

struct sc_reduction {
    int_binary_form form;
    int_mat transform; // form == act_form(transform, input)
    int q0_moves = 0;
    int julia_moves = 0;
    julia_data julia; // of the output
};

struct sc_reduction_gauss {
    gauss_binary_form form;
    gauss_mat transform;
    int q0_moves = 0;
    int julia_moves = 0;
    julia_data julia;
};

/* Returns at once when the Julia point already lies in the fundamental
 * domain. Otherwise reduces z(Q0) (when the roots are simple), then the
 * Julia point, until the Julia point of the output lies in the domain.
 * Throws not_stable, non_termination. */
sc_reduction stoll_cremona_reduce(int_binary_form const & f);
sc_reduction_gauss stoll_cremona_reduce(gauss_binary_form const & f);

struct bounds_report {
    double theta0;
    double lead;       // |a0|
    double lead_bound; // theta0 / (3^(n/2) n^n)
    double max_root_sq;
    double root_bound; // theta0 / ((n-1)^(n-1) 3^(n/2) a0^2)
    bool point_in_domain;
    bool lead_ok;
    bool roots_ok;
    bool roots_vacuous; // a0 = 0: no finite bound
    bool reduced_first = false;
    bool ok() const { return lead_ok && roots_ok; }
};

/* Both bounds with relative slack 1e-9, using the real normalization of
 * theta0. The form overload first moves the Julia point into the domain
 * when it lies outside. */
bounds_report julia_bounds_check(binary_form const & f);
bounds_report julia_bounds_check(julia_data const & j, std::vector<cplx> const & descending);

} // namespace binform

#endif
