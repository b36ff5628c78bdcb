#ifndef BFC_CENSUS_HPP
#define BFC_CENSUS_HPP

#include <string>
#include <vector>

#include "bfc/equivalence.hpp"
#include "bfc/order.hpp"

namespace bfc {

struct CensusFlags {
    bool primitive = false;    // content 1
    bool squarefree = false;   // discriminant != 0
    bool irreducible = false;  // irreducible over Q

    std::string encode() const;
    bool operator==(const CensusFlags&) const = default;
};

/// All forms a0 X^r + ... + ar Y^r with a0 in [1, H] and |ai| <= H,
/// deterministic lexicographic order. The a0 = 0 band needs no separate
/// sweep: swapping X and Y (unimodular) lands every such form, up to the
/// sign normalization, inside this box.
std::vector<BinaryForm> enumerate_forms(int r, long height, const CensusFlags& flags = {});

struct CensusRow {
    Int disc;
    size_t form_count = 0;
    size_t class_count = 0;
    std::vector<std::string> representatives;  // canonical encodings, sorted
};

struct CensusReport {
    int degree = 0;
    long height = 0;
    CensusFlags flags;
    std::vector<CensusRow> rows;               // sorted by discriminant
    size_t cache_hits = 0;

    std::string to_json() const;               // deterministic, byte-stable
    std::string to_csv() const;
};

/// Census of the nonzero-discriminant forms in the box, grouped by exact
/// discriminant and classified within each group. An optional append-only
/// JSONL cache (one record per form) lets a rerun skip classification for
/// groups it fully covers.
CensusReport census_by_discriminant(int r, long height, const CensusFlags& flags,
                                    const std::vector<unsigned>& ladder = default_precision_ladder(),
                                    const std::string& cache_path = "");

/// F_beta = F(X + beta*Y, a*Y); every member has discriminant
/// a^{r(r-1)} * D(F).
std::vector<BinaryForm> translation_family(const BinaryForm& f, long a, long beta_lo, long beta_hi);

/// The augmented family forms (F_beta together with the distinguished
/// root data) are equivalent exactly when a | beta1 - beta2: the unique
/// candidate map is (1, (beta1-beta2)/a; 0, 1) up to scalar, integral
/// only under that divisibility. The plain forms, by contrast, always
/// collapse: F_beta = (F_0)_{(1 beta; 0 1)} exactly. Both views are
/// reported; the collapse is expected, not a finding against the
/// augmented statement.
struct FamilyReport {
    std::vector<BinaryForm> members;               // beta = beta_lo .. beta_hi
    std::vector<std::vector<size_t>> classes;      // plain GL2(Z) classes
    std::vector<std::vector<size_t>> augmented_classes;  // by beta mod a
    /// pairs with beta1 != beta2 (mod a) whose plain forms are equivalent
    std::vector<std::pair<long, long>> collapsed_pairs;

    std::string to_json() const;
};

FamilyReport family_inequivalence_check(const BinaryForm& f, long a, long beta_lo, long beta_hi,
                                        const std::vector<unsigned>& ladder = default_precision_ladder());

/// Degree-s forms G in the height-H box with resultant(F0, G) = +-1,
/// grouped up to overall sign: one representative per {G, -G} pair, with
/// the first nonzero coefficient positive; sorted.
std::vector<BinaryForm> resultant_unit_search(const BinaryForm& f0, int s, long height);

/// Number of distinct primes dividing c (c >= 1).
int omega(const Int& c);

/// Number of alpha-tuples of positive integers whose product divides c;
/// multiplicative, prod C(e_i + alpha, alpha) over prime powers.
Int tau_alpha(const Int& c, int alpha);

/// Sum of d over all d >= 1 with d^k dividing c.
Int divisor_power_sum(const Int& c, int k);

struct BoundValue {
    Int order_bound;   // 2^{24 r^3}
    Int class_bound;   // 2^{24 r^3 (1+omega(c))} * tau_{r(r-1)/2}(c^2) * sum_{d^{r(r-1)/2} | c} d
};

BoundValue bound_evaluator(int r, const Int& c);

} // namespace bfc

#endif
