#ifndef BFC_ROOTS_HPP
#define BFC_ROOTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bfc/forms.hpp"

namespace bfc {

using BigFloat = mpf_class;

/// Complex number over GMP floats. Precision is carried by the operands;
/// arithmetic results inherit the largest operand precision.
struct BigComplex {
    BigFloat re, im;

    BigComplex() : re(0), im(0) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    static BigComplex with_prec(double r, double i, unsigned prec) {
        return {BigFloat(r, prec), BigFloat(i, prec)};
    }

    // mpf_class temporaries built from compound expressions get the
    // *default* precision, so every operation assigns into a result
    // allocated at the joint operand precision instead.
    unsigned prec_with(const BigComplex& o) const {
        return static_cast<unsigned>(std::max(re.get_prec(), o.re.get_prec()));
    }
    unsigned prec() const { return static_cast<unsigned>(re.get_prec()); }

    BigComplex operator+(const BigComplex& o) const {
        BigComplex r = zero(prec_with(o));
        r.re = re + o.re; r.im = im + o.im;
        return r;
    }
    BigComplex operator-(const BigComplex& o) const {
        BigComplex r = zero(prec_with(o));
        r.re = re - o.re; r.im = im - o.im;
        return r;
    }
    BigComplex operator-() const {
        BigComplex r = zero(prec());
        r.re = -re; r.im = -im;
        return r;
    }
    BigComplex operator*(const BigComplex& o) const {
        BigComplex r = zero(prec_with(o));
        r.re = re * o.re - im * o.im;
        r.im = re * o.im + im * o.re;
        return r;
    }
    BigComplex operator/(const BigComplex& o) const {
        unsigned p = prec_with(o);
        BigFloat n(0, p);
        n = o.re * o.re + o.im * o.im;
        BigComplex r = zero(p);
        r.re = (re * o.re + im * o.im) / n;
        r.im = (im * o.re - re * o.im) / n;
        return r;
    }

    static BigComplex zero(unsigned prec) { return {BigFloat(0, prec), BigFloat(0, prec)}; }

    BigFloat norm2() const {
        BigFloat n(0, prec());
        n = re * re + im * im;
        return n;
    }
    BigFloat abs() const {
        BigFloat a(0, prec());
        a = sqrt(norm2());
        return a;
    }
    bool is_zero() const { return re == 0 && im == 0; }
};

/// Point of P^1(C): a finite complex value or the distinguished infinity.
struct ProjectivePoint {
    bool infinite = false;
    BigComplex z;

    static ProjectivePoint inf() { return {true, {}}; }
    static ProjectivePoint finite(BigComplex v) { return {false, std::move(v)}; }
};

/// Certified numeric roots of a squarefree form: exactly degree() points,
/// each finite root carrying an inclusion-disk radius; disks are pairwise
/// disjoint (separations exceed twice the largest radius).
struct RootSet {
    std::vector<ProjectivePoint> points;
    std::vector<BigFloat> radii;    // radius 0 for the point at infinity
    unsigned precision_bits = 0;

    BigFloat max_radius() const;
    /// Smallest pairwise distance between finite points.
    BigFloat min_separation() const;
};

/// Numeric projective roots with certified separation. Escalates the
/// working precision by doubling up to max_precision_bits.
/// Throws not_squarefree_error when D(F) = 0, precision_exhausted_error
/// when the separation cannot be certified within the budget.
RootSet roots(const BinaryForm& f, unsigned precision_bits,
              unsigned max_precision_bits = 4096);

/// Cross ratio (a1-a2)(a3-a4) / ((a1-a3)(a2-a4)), with the limit
/// adaptations when one of the four points is infinity.
/// Throws degenerate_error unless the four points are distinct and at
/// most one is infinite.
BigComplex cross_ratio(const ProjectivePoint& p1, const ProjectivePoint& p2,
                       const ProjectivePoint& p3, const ProjectivePoint& p4);

/// Multiset of cross ratios over all ordered 4-tuples of distinct roots,
/// with a quantized hash usable only as an inequality filter.
struct CrossRatioProfile {
    std::vector<BigComplex> values;  // one per ordered distinct 4-tuple
    BigFloat error_bound;            // first-order propagated error, all values
    unsigned quant_digits = 12;
    std::uint64_t hash = 0;

    /// Quantized [re, im] decimal strings, sorted, as hashed.
    std::vector<std::pair<std::string, std::string>> quantized() const;
};

CrossRatioProfile cross_ratio_profile(const BinaryForm& f, unsigned precision_bits,
                                      unsigned quant_digits = 12);

/// True when the two profiles match as multisets within
/// 2*(sum of the error bounds); used to double-check hash mismatches.
bool profiles_consistent(const CrossRatioProfile& a, const CrossRatioProfile& b);

struct WeakEquivalence {
    RatMatrix2 T;   // theta_G = <T>(theta_F), canonically normalized
    Rat lambda;     // G = lambda * F_{T^{-1}}, verified exactly
};

struct TransformSearchOptions {
    unsigned denominator_bound_exp10 = 6;  // continued-fraction cap 10^6
};

/// All exact rational projective maps carrying the full root set of F
/// onto the root set of G, recovered from 3-point interpolation over
/// ordered triples of G's roots. `all_matchings_resolved` is false when
/// some matching survived numerically but could not be rationalized
/// within the denominator bound.
struct TransformCandidates {
    std::vector<RatMatrix2> maps;
    bool all_matchings_resolved = true;
    int matchings_tried = 0;
};

TransformCandidates weak_transform_candidates(const BinaryForm& f, const BinaryForm& g,
                                              unsigned precision_bits,
                                              const TransformSearchOptions& opts = {});

/// Rational-map reconstruction: some matching of roots extending to a
/// full correspondence yields (T, lambda) with G = lambda * F_{T^{-1}},
/// verified by exact rational expansion. Absent when no matching verifies.
std::optional<WeakEquivalence>
weak_equivalence_transform(const BinaryForm& f, const BinaryForm& g,
                           unsigned precision_bits,
                           const TransformSearchOptions& opts = {});

} // namespace bfc

#endif
