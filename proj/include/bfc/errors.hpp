#ifndef BFC_ERRORS_HPP
#define BFC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bfc {

// Domain errors. The CLI maps these to exit code 1; malformed input
// encodings are reported as usage errors (exit code 2) before any of
// these can be thrown.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct all_zero_error : domain_error {
    all_zero_error() : domain_error("form has all coefficients zero") {}
};

struct singular_matrix_error : domain_error {
    singular_matrix_error() : domain_error("transformation matrix is singular") {}
};

struct not_squarefree_error : domain_error {
    not_squarefree_error() : domain_error("form has a repeated factor (discriminant 0)") {}
};

struct precision_exhausted_error : domain_error {
    explicit precision_exhausted_error(const std::string& what)
        : domain_error("precision exhausted: " + what) {}
};

struct degenerate_error : domain_error {
    explicit degenerate_error(const std::string& what) : domain_error(what) {}
};

struct reducible_error : domain_error {
    reducible_error() : domain_error("form is reducible over Q") {}
    explicit reducible_error(const std::string& form)
        : domain_error("form is reducible over Q: " + form) {}
};

// A non-integral structure constant would contradict ring closure of the
// invariant order; treated as an internal error.
struct closure_violation_error : domain_error {
    closure_violation_error() : domain_error("invariant order closure violated") {}
    explicit closure_violation_error(const std::string& form)
        : domain_error("invariant order closure violated for " + form) {}
};

struct field_mismatch_error : domain_error {
    field_mismatch_error() : domain_error("order presentations have different minimal polynomials") {}
};

struct degree_too_small_error : domain_error {
    explicit degree_too_small_error(const std::string& what) : domain_error(what) {}
};

struct unknown_pair_error : domain_error {
    std::string lhs, rhs;
    unknown_pair_error(std::string l, std::string r)
        : domain_error("equivalence undecided for pair " + l + " vs " + r),
          lhs(std::move(l)), rhs(std::move(r)) {}
};

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace bfc

#endif
