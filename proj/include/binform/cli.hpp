#ifndef BINFORM_CLI_HPP
#define BINFORM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "binform/arith.hpp"

namespace binform::cli {

enum class form_kind { quad, herm, binary };

/* Comma-separated coefficients, descending powers of X. */
struct form_spec {
    form_kind kind;
    std::vector<gaussian_rational> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/* Throws parse_error. quad and herm need exactly three entries. */
form_spec parse_form_spec(form_kind kind, std::string const & text);
/* Canonical text; parse_form_spec(kind, print_form_spec(s)) == s. */
std::string print_form_spec(form_spec const & s);

/* "-23", "-3,-7", "-3..-163:4" (step is a magnitude). Throws parse_error. */
std::vector<integer> parse_disc_list(std::string const & text);

enum exit_code : int {
    exit_ok = 0,
    exit_domain = 2,
    exit_unstable = 3,
    exit_solver = 4,
};

/* args excludes the program name. Never throws; errors go to err and set
 * the exit code. */
int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err);

} // namespace binform::cli

#endif
