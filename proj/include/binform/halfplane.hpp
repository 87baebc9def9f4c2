#ifndef BINFORM_HALFPLANE_HPP
#define BINFORM_HALFPLANE_HPP

#include <string>
#include <vector>

#include "binform/arith.hpp"

namespace binform {

/* Point x + iy of the upper half-plane, y > 0. */
struct h2_point {
    double x;
    double y;

    h2_point(double x_, double y_);
    explicit h2_point(cplx z) : h2_point(z.real(), z.imag()) {}
    cplx as_complex() const { return {x, y}; }
};

/* Point z + t j of hyperbolic upper half-space, t > 0. */
struct h3_point {
    cplx z;
    double t;

    h3_point(cplx z_, double t_);
};

enum class membership { interior, boundary, outside };
std::string to_string(membership m);

inline constexpr double default_domain_tol = 1e-9;
inline constexpr int point_reduction_guard = 256;

/* z -> (az + b)/(cz + d). */
h2_point mobius_h2(int_mat const & m, h2_point const & p);
h3_point mobius_h3(gauss_mat const & m, h3_point const & p);
/* The quaternionic action for any complex matrix of determinant one. */
h3_point mobius_h3(mat2<cplx> const & m, h3_point const & p);

/* Action on the Riemann sphere; infinity is represented by an infinite
 * real part. */
cplx mobius_sphere(mat2<cplx> const & m, cplx z);
bool is_sphere_infinity(cplx z);
cplx sphere_infinity();

/* Standard domain |z| >= 1, |Re z| <= 1/2, with a +-tol band. */
membership in_F_h2(h2_point const & p, double tol = default_domain_tol);

/* Picard domain |Re z| <= 1/2, 0 <= Im z <= 1/2, |z|^2 + t^2 >= 1. The
 * band is applied to every face except Im z = 0. */
membership in_F_h3_Qi(h3_point const & p, double tol = default_domain_tol);

struct h2_reduction {
    h2_point point;
    int_mat transform; // point == mobius_h2(transform, input)
};

struct h3_reduction {
    h3_point point;
    gauss_mat transform; // point == mobius_h3(transform, input)
};

/* Translate into the strip, invert when inside the unit circle, repeat.
 * Throws non_termination after point_reduction_guard rounds. */
h2_reduction reduce_point_h2(h2_point const & p);

/* Moves: translation by the nearest Gaussian integer, the rotation
 * diag(i,-i) (z -> -z) when Im z < 0, and S when |z|^2 + t^2 < 1. */
h3_reduction reduce_point_h3_Qi(h3_point const & p);

/* Word in S and powers of T. A syllable with generator S has power 1. */
struct st_syllable {
    enum class gen { S, T } g;
    integer power;

    friend bool operator==(st_syllable const &, st_syllable const &) = default;
};

struct st_word {
    std::vector<st_syllable> syllables;

    std::size_t length() const { return syllables.size(); }
    /* Number of letters S, T, T^-1 once powers are written out. */
    integer expanded_length() const;
    int_mat product() const;
    std::string str() const;
};

/* Nearest-integer continued fraction on the first column. The product of
 * the word is +-m. */
st_word decompose_ST(int_mat const & m);

} // namespace binform

#endif
