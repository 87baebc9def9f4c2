#ifndef BINFORM_ERROR_HPP
#define BINFORM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace binform {

/* Base of every exception thrown by the library. */
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Input outside the mathematical domain of the operation. */
struct domain_error : error {
    using error::error;
};

struct not_positive_definite : domain_error {
    not_positive_definite() : domain_error("not positive definite") {}
    explicit not_positive_definite(std::string const & what)
        : domain_error("not positive definite: " + what) {}
};

struct invalid_discriminant : domain_error {
    using domain_error::domain_error;
};

struct degenerate_input : domain_error {
    using domain_error::domain_error;
};

struct degree_too_small : domain_error {
    using domain_error::domain_error;
};

struct policy_not_applicable : domain_error {
    using domain_error::domain_error;
};

struct parse_error : domain_error {
    using domain_error::domain_error;
};

/* Form has a root of multiplicity >= n/2, or a repeated root where simple
 * roots are required. */
struct not_stable : error {
    using error::error;
};

struct repeated_root : not_stable {
    using not_stable::not_stable;
};

/* Numerical iteration failures. */
struct numerical_error : error {
    using error::error;
};

struct non_convergence : numerical_error {
    using numerical_error::numerical_error;
};

struct non_termination : numerical_error {
    using numerical_error::numerical_error;
};

struct solver_diverged : numerical_error {
    using numerical_error::numerical_error;
};

} // namespace binform

#endif
