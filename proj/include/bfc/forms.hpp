#ifndef BFC_FORMS_HPP
#define BFC_FORMS_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

#include "bfc/errors.hpp"

namespace bfc {

using Int = mpz_class;
using Rat = mpq_class;

/// Integer binary form F(X,Y) = a0 X^r + a1 X^{r-1} Y + ... + ar Y^r.
/// The degree is declared, so a0 may vanish (the form divisible by Y).
/// Immutable value type.
class BinaryForm {
public:
    /// Throws all_zero_error when every coefficient is 0.
    explicit BinaryForm(std::vector<Int> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& coeff(int i) const { return coeffs_[static_cast<size_t>(i)]; }

    /// F(x, y) evaluated exactly.
    Int eval(const Int& x, const Int& y) const;

    /// Canonical text encoding "r:a0,a1,...,ar".
    std::string encode() const;
    static BinaryForm parse(const std::string& text);

    bool operator==(const BinaryForm& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const BinaryForm& o) const { return coeffs_ != o.coeffs_; }
    bool operator<(const BinaryForm& o) const;

private:
    std::vector<Int> coeffs_;
};

/// Binary form with rational coefficients (result of a GL2(Q) action).
class RatBinaryForm {
public:
    explicit RatBinaryForm(std::vector<Rat> coeffs);
    explicit RatBinaryForm(const BinaryForm& f);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_integral() const;
    /// Requires is_integral().
    BinaryForm to_integer() const;
    /// Primitive integer form obtained by clearing denominators and
    /// dividing by the content; the returned scalar s satisfies
    /// this = s * primitive_part.
    std::pair<Rat, BinaryForm> primitive_part() const;

    bool operator==(const RatBinaryForm& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<Rat> coeffs_;
};

/// 2x2 integer matrix acting on forms by F_U(X,Y) = F(aX+bY, cX+dY).
struct IntMatrix2 {
    Int a, b, c, d;

    Int det() const { return a * d - c * b; }
    bool unimodular() const { Int dt = det(); return dt == 1 || dt == -1; }

    IntMatrix2 operator*(const IntMatrix2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    IntMatrix2 operator-() const { return {-a, -b, -c, -d}; }
    bool operator==(const IntMatrix2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }

    static IntMatrix2 identity() { return {1, 0, 0, 1}; }

    /// Encoding "a,b;c,d".
    std::string encode() const;
    static IntMatrix2 parse(const std::string& text);
};

/// 2x2 rational matrix, canonically normalized so that the first nonzero
/// entry (in the order a, b, c, d) equals 1. Two matrices inducing the
/// same projective map compare equal.
struct RatMatrix2 {
    Rat a, b, c, d;

    /// Throws singular_matrix_error when the determinant vanishes.
    static RatMatrix2 make(Rat a, Rat b, Rat c, Rat d);
    static RatMatrix2 from_int(const IntMatrix2& u);

    Rat det() const { return a * d - c * b; }
    RatMatrix2 inverse() const;
    RatMatrix2 operator*(const RatMatrix2& o) const;
    bool operator==(const RatMatrix2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }

    /// Smallest positive scalar multiple with integer entries of content 1.
    IntMatrix2 primitive_integer() const;

    std::string encode() const;
};

// ---- forms-core operations ----

BinaryForm make_form(const std::vector<Int>& coeffs);

/// gcd of all coefficients (positive).
Int content(const BinaryForm& f);

/// Exact discriminant; 0 iff F has a repeated projective root.
/// Convention: D(F) = disc(F(X,1)) for monic F (a0 = 1).
Int discriminant(const BinaryForm& f);

BinaryForm transform(const BinaryForm& f, const IntMatrix2& u);
RatBinaryForm transform(const RatBinaryForm& f, const RatMatrix2& t);
RatBinaryForm transform(const BinaryForm& f, const RatMatrix2& t);

/// Resultant of binary forms of their declared degrees (homogeneous
/// Sylvester determinant; correct when leading coefficients vanish).
Int resultant(const BinaryForm& f, const BinaryForm& g);

/// Product of two forms as polynomials.
BinaryForm multiply(const BinaryForm& f, const BinaryForm& g);

struct DiscriminantProductIdentity {
    Int disc_of_product;
    Int product_of_discs;
    Int product_of_resultants_squared;
    bool holds() const {
        return disc_of_product == product_of_discs * product_of_resultants_squared;
    }
};

/// Evaluates both sides of D(prod F_i) = prod D(F_i) * prod_{i<j} R(F_i,F_j)^2.
DiscriminantProductIdentity discriminant_product(const std::vector<BinaryForm>& factors);

// ---- shared exact linear algebra helpers ----

/// Determinant of a square integer matrix (fraction-free Bareiss).
Int det_bareiss(std::vector<std::vector<Int>> m);

/// Determinant of a square rational matrix (Gaussian elimination).
Rat det_rational(std::vector<std::vector<Rat>> m);

Rat parse_rat(const std::string& s);
std::string rat_to_string(const Rat& q);

} // namespace bfc

#endif
