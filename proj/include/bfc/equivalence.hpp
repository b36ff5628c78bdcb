#ifndef BFC_EQUIVALENCE_HPP
#define BFC_EQUIVALENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "bfc/roots.hpp"

namespace bfc {

enum class VerdictStatus { Equivalent, NotEquivalent, Unknown };

/// Outcome of a GL2(Z)-equivalence decision. Equivalent always carries a
/// unimodular certificate with G = F_U re-verified by exact expansion.
/// NotEquivalent names the separating invariant; "matching-exhausted"
/// means every 3-root matching was refuted. Unknown carries the largest
/// precision tried.
struct EquivalenceVerdict {
    VerdictStatus status = VerdictStatus::Unknown;
    std::optional<IntMatrix2> certificate;
    std::string separating_invariant;
    unsigned precision_exhausted = 0;
    int matchings_tried = 0;

    std::string to_json() const;
};

/// Cheap exact filters: degree, content, discriminant, and (degree >= 4)
/// the quantized cross-ratio profile. A hash mismatch is double-checked
/// by tolerance multiset comparison before it may separate. Absent when
/// every filter passes.
std::optional<EquivalenceVerdict>
equivalence_filters(const BinaryForm& f, const BinaryForm& g, unsigned profile_precision = 256);

/// Default precision escalation ladder.
std::vector<unsigned> default_precision_ladder();

/// Full decision for squarefree forms of degree >= 3: filters, then
/// root-matching reconstruction of candidate maps, each scaled to a
/// primitive integer matrix and accepted only on exact verification
/// G = F_{+-U}. Throws not_squarefree_error / degree_too_small_error.
EquivalenceVerdict find_equivalence(const BinaryForm& f, const BinaryForm& g,
                                    const std::vector<unsigned>& ladder = default_precision_ladder());

/// Partition into equivalence classes (indices into `forms`, each class
/// sorted, classes ordered by smallest member). Throws unknown_pair_error
/// when any needed pairwise decision stays Unknown.
std::vector<std::vector<size_t>>
classify(const std::vector<BinaryForm>& forms,
         const std::vector<unsigned>& ladder = default_precision_ladder());

} // namespace bfc

#endif
