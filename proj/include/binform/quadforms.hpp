#ifndef BINFORM_QUADFORMS_HPP
#define BINFORM_QUADFORMS_HPP

#include <string>
#include <vector>

#include "binform/arith.hpp"
#include "binform/halfplane.hpp"

namespace binform {

/* Q(X,Z) = a X^2 + b XZ + c Z^2. T is rational on the exact paths and
 * double for numerically assembled quadratics. */
template <class T>
struct basic_quad_form {
    T a, b, c;

    T discriminant() const { return b * b - 4 * a * c; }
    /* Leading principal minors of [[a, b/2], [b/2, c]]: a > 0 and
     * ac - b^2/4 > 0. */
    bool is_positive_definite() const { return a > 0 && discriminant() < 0; }

    friend bool operator==(basic_quad_form const &, basic_quad_form const &) = default;
};

using quad_form = basic_quad_form<rational>;
using real_quad_form = basic_quad_form<double>;

std::string to_string(quad_form const & q);
std::string to_string(real_quad_form const & q);

/* Q^M(X,Z) = Q(aX + bZ, cX + dZ). */
quad_form act(int_mat const & m, quad_form const & q);
real_quad_form act(int_mat const & m, real_quad_form const & q);

/* Root in the upper half-plane: (-b + sqrt(disc))/(2a). Throws
 * not_positive_definite. */
h2_point zero_map(quad_form const & q);
h2_point zero_map(real_quad_form const & q);

struct reduced_check {
    bool reduced;
    bool boundary; // |b| = a or a = c
};

/* |b| <= a <= c. Throws not_positive_definite. */
reduced_check is_reduced(quad_form const & q);

struct quad_reduction {
    quad_form form;
    int_mat transform; // form == act(transform, input)
    int steps;         // number of S-steps taken
};

/* Gauss reduction; on the boundary (|b| = a or a = c) the representative
 * with b >= 0 is returned. Exact arithmetic. Throws not_positive_definite. */
quad_reduction reduce(quad_form const & q);

/* max(|a|, |b|, |c|). */
rational height(quad_form const & q);
/* Smallest height in the SL2(Z) orbit: the c-coefficient of the reduced
 * representative. */
rational class_height(quad_form const & q);

enum class form_filter { primitive, all };

struct reduced_class_list {
    integer discriminant;
    std::vector<quad_form> forms; // sorted by (a, b, c)
    std::size_t count = 0;

    /* Forms of least height (their c). Empty for an empty list. */
    std::vector<quad_form> minimal_height_forms() const;
};

/* Reduced integral forms of discriminant disc < 0. Both signs of b are
 * listed except on the boundary, where only b >= 0 is kept. With
 * form_filter::primitive only gcd(a, b, c) = 1 forms are listed, which is
 * the class number h(disc). Throws invalid_discriminant for disc >= 0. */
reduced_class_list enumerate_reduced(integer const & disc, form_filter filter = form_filter::primitive);

} // namespace binform

#endif
