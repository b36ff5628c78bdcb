#ifndef BFC_SUNIT_HPP
#define BFC_SUNIT_HPP

#include <map>
#include <string>
#include <vector>

#include "bfc/forms.hpp"

namespace bfc {

/// Multiplicative group generated by -1 and the given primes inside Q*,
/// searched over |exponent| <= exponent_bound for the x of x + y = 1.
/// The generator count n follows the convention n = |primes| + 1 (the
/// torsion generator counts), which only enlarges the bound.
struct SUnitGroupSpec {
    std::vector<long> primes;        // pairwise distinct, each >= 2
    long exponent_bound = 1;

    int rank() const { return static_cast<int>(primes.size()) + 1; }
};

struct SUnitSolution {
    Rat x, y;                        // x + y = 1 exactly, both nonzero
    std::map<long, long> ex, ey;     // prime -> exponent

    std::string to_json() const;
};

/// All (x, y), x = +-prod p^e with |e| <= bound, such that y = 1 - x is
/// nonzero and supported on the spec primes (y's exponents are free).
/// Exact arithmetic, deduplicated, sorted by x ascending.
std::vector<SUnitSolution> sunit_solutions(const SUnitGroupSpec& spec);

struct BSBoundReport {
    size_t count = 0;
    Int bound;                       // 2^{8(n+1)}, n = |primes| + 1
    bool holds = false;

    std::string to_json() const;
};

BSBoundReport verify_bs_bound(const SUnitGroupSpec& spec,
                              const std::vector<SUnitSolution>& solutions);

std::string solutions_to_json(const std::vector<SUnitSolution>& solutions);

} // namespace bfc

#endif
