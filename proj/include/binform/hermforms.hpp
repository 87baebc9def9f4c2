#ifndef BINFORM_HERMFORMS_HPP
#define BINFORM_HERMFORMS_HPP

#include <string>
#include <vector>

#include "binform/arith.hpp"
#include "binform/halfplane.hpp"
#include "binform/quadforms.hpp"

namespace binform {

/* Q(X,Z) = a X Xbar + b X Zbar + bbar Xbar Z + c Z Zbar, i.e. the matrix
 * [[a, b], [bbar, c]]. */
template <class R, class C>
struct basic_herm_form {
    R a;
    C b;
    R c;

    friend bool operator==(basic_herm_form const &, basic_herm_form const &) = default;
};

using herm_form = basic_herm_form<integer, gaussian_int>;
using complex_herm_form = basic_herm_form<double, cplx>;

/* ac - |b|^2 */
integer discriminant(herm_form const & q);
double discriminant(complex_herm_form const & q);
bool is_positive_definite(herm_form const & q);
bool is_positive_definite(complex_herm_form const & q);

complex_herm_form to_complex(herm_form const & q);
std::string to_string(herm_form const & q);
std::string to_string(complex_herm_form const & q);

/* M* A M. */
herm_form act_herm(gauss_mat const & m, herm_form const & q);
complex_herm_form act_herm(mat2<cplx> const & m, complex_herm_form const & q);

/* (-b/a, sqrt(disc)/a). Throws not_positive_definite. */
h3_point zero_map_herm(herm_form const & q);
h3_point zero_map_herm(complex_herm_form const & q);

/* Exact test of zero_map_herm(q) in the Picard domain:
 * 2|Re b| <= a, -a <= 2 Im b <= 0, a <= c. Throws not_positive_definite. */
reduced_check is_reduced_herm(herm_form const & q);

struct herm_reduction {
    herm_form form;
    gauss_mat transform; // form == act_herm(transform, input)
    int steps;           // number of inversions
};

/* Translate by the nearest Gaussian integer, fold Im with diag(i,-i),
 * invert when c < a; then canonical_herm. Throws not_positive_definite,
 * non_termination. */
herm_reduction reduce_herm(herm_form const & q);

/* For a reduced q: the least form under (a, Re b, Im b, c) among the
 * reduced forms reachable from q by closing under words of length <= 3 in
 * the translations by 1 and i, diag(i,-i) and S. Boundary forms of one
 * class collapse to a single representative. */
herm_reduction canonical_herm(herm_form const & q);

struct herm_class_list {
    integer discriminant;
    std::vector<herm_form> forms; // sorted by (a, Re b, Im b, c)
    std::size_t count = 0;
};

/* Every integral form with the reduced coefficient bounds and
 * discriminant disc, with no identification of boundary forms and
 * imprimitive forms included. Throws invalid_discriminant for disc <= 0. */
herm_class_list enumerate_reduced_herm(integer const & disc);

/* Classes: distinct canonical_herm images of the enumeration. */
std::vector<herm_form> herm_class_representatives(integer const & disc);

/* Q(sqrt D), D < 0 square-free. */
class imaginary_quadratic_field {
  public:
    /* Throws invalid_discriminant unless D < 0 and square-free. */
    explicit imaginary_quadratic_field(long D);

    long D() const { return D_; }
    long d_K() const { return d_K_; }
    bool class_number_one() const;

    /* x + y w with w = sqrt D, or (1 + sqrt D)/2 when D = 1 mod 4. */
    cplx embed(long x, long y) const;
    long norm(long x, long y) const;
    /* Index of the ideal <x1 + y1 w, x2 + y2 w> in the ring of integers. */
    integer ideal_norm(long x1, long y1, long x2, long y2) const;

  private:
    long D_;
    long d_K_;
};

/* The bounded check |cz + d|^2 + |c|^2 t^2 >= 1 over coprime pairs with
 * norms <= search_bound. Outside on any violation; boundary when the least
 * value is within tol of 1. Throws policy_not_applicable unless the class
 * number is one. */
membership in_B_K(h3_point const & p, imaginary_quadratic_field const & K, long search_bound,
                  double tol = default_domain_tol);

/* Floor region F_K: the Q(i) strip, the Q(sqrt -3) triangles, or the
 * rectangle P_K otherwise. */
membership in_F_K_floor(cplx z, imaginary_quadratic_field const & K, double tol = default_domain_tol);
/* 0 <= Re z <= 1, 0 <= Im z <= sqrt|d_K|/2. */
membership in_P_K(cplx z, imaginary_quadratic_field const & K, double tol = default_domain_tol);

} // namespace binform

#endif
