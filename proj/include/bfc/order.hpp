#ifndef BFC_ORDER_HPP
#define BFC_ORDER_HPP

#include <string>
#include <vector>

#include "bfc/forms.hpp"

namespace bfc {

/// Exact irreducibility over Q of the declared-degree form. A form with
/// vanishing leading coefficient is divisible by Y, hence reducible for
/// degree >= 2. Modular factor-degree sieve with an exact Kronecker
/// factor search as the certifying fallback.
bool irreducible(const BinaryForm& f);

/// The invariant order of an irreducible form of degree r: the rank-r
/// ring with basis
///   w1 = 1, w2 = a0*t, w3 = a0*t^2 + a1*t, ...,
///   w_r = a0*t^{r-1} + ... + a_{r-2}*t,
/// where t is a root of the minimal polynomial F(X,1)/a0.
/// Univariate polynomials here are ascending (index = exponent).
struct OrderPresentation {
    int degree = 0;                               // r
    std::vector<Rat> minimal_poly;                // monic, size r+1, ascending
    std::vector<std::vector<Rat>> basis;          // r x r; basis[i][j] = coeff of t^j in w_{i+1}
    std::vector<std::vector<std::vector<Int>>> structure;  // w_i w_j = sum_k c[i][j][k] w_k

    std::string to_json() const;
};

/// Throws reducible_error when F factors over Q, closure_violation_error
/// if a structure constant fails to be integral (internal error).
OrderPresentation invariant_order(const BinaryForm& f);

/// det(Tr(w_i w_j)) with traces read off the structure constants.
Int order_discriminant(const OrderPresentation& o);

/// Lattice equality of the two spans inside Q(t). Both presentations
/// must already live over the same minimal polynomial; throws
/// field_mismatch_error otherwise. Decided by Hermite-normal-form
/// comparison after clearing denominators.
bool order_equal(const OrderPresentation& a, const OrderPresentation& b);

/// Multiset (sorted) of characteristic polynomials, ascending integer
/// coefficients, of multiplication by sum x_i w_i over |x_i| <= bound.
/// Equality is necessary for ring isomorphism; never sufficient.
std::vector<std::vector<Int>> order_fingerprint(const OrderPresentation& o, int height_bound);

/// Image of the root under the matrix action: for G = F_U the root of G
/// is (d t - b) / (a - c t) with t the root of F; returned reduced mod
/// min_poly as an ascending coefficient vector of length deg(min_poly).
std::vector<Rat> theta_image(const IntMatrix2& u, const std::vector<Rat>& min_poly);

/// Re-express a presentation through a field identification: old root =
/// theta_map(new root) mod new_min_poly. Structure constants carry over.
OrderPresentation rebase(const OrderPresentation& o,
                         const std::vector<Rat>& new_min_poly,
                         const std::vector<Rat>& theta_map);

} // namespace bfc

#endif
