#include "bfc/equivalence.hpp"

#include <numeric>
#include <sstream>

namespace bfc {

namespace {

EquivalenceVerdict separated(const std::string& invariant) {
    EquivalenceVerdict v;
    v.status = VerdictStatus::NotEquivalent;
    v.separating_invariant = invariant;
    return v;
}

} // namespace

std::vector<unsigned> default_precision_ladder() { return {256, 1024, 4096}; }

std::optional<EquivalenceVerdict>
equivalence_filters(const BinaryForm& f, const BinaryForm& g, unsigned profile_precision) {
    if (f.degree() != g.degree()) return separated("degree");
    if (content(f) != content(g)) return separated("content");
    // det U = +-1 and r(r-1) even force equal discriminants
    if (discriminant(f) != discriminant(g)) return separated("discriminant");
    if (f.degree() >= 4) {
        CrossRatioProfile pf = cross_ratio_profile(f, profile_precision);
        CrossRatioProfile pg = cross_ratio_profile(g, profile_precision);
        if (pf.hash != pg.hash && !profiles_consistent(pf, pg))
            return separated("cross-ratio-profile");
    }
    return std::nullopt;
}

EquivalenceVerdict find_equivalence(const BinaryForm& f, const BinaryForm& g,
                                    const std::vector<unsigned>& ladder) {
    if (f.degree() < 3 || g.degree() < 3)
        throw degree_too_small_error("equivalence decision needs degree >= 3");
    if (discriminant(f) == 0 || discriminant(g) == 0) throw not_squarefree_error();
    if (auto v = equivalence_filters(f, g)) return *v;

    EquivalenceVerdict out;
    for (unsigned prec : ladder) {
        TransformCandidates cands = weak_transform_candidates(f, g, prec);
        out.matchings_tried = cands.matchings_tried;
        out.precision_exhausted = prec;
        for (const RatMatrix2& t : cands.maps) {
            // theta_G = <U^{-1}> theta_F, so the integer candidate comes
            // from the inverse map
            IntMatrix2 u = t.inverse().primitive_integer();
            if (!u.unimodular()) continue;
            if (transform(f, u) == g) {
                out.status = VerdictStatus::Equivalent;
                out.certificate = u;
                return out;
            }
            IntMatrix2 nu = -u;
            if (transform(f, nu) == g) {
                out.status = VerdictStatus::Equivalent;
                out.certificate = nu;
                return out;
            }
        }
        if (cands.all_matchings_resolved) {
            out.status = VerdictStatus::NotEquivalent;
            out.separating_invariant = "matching-exhausted";
            return out;
        }
    }
    out.status = VerdictStatus::Unknown;
    return out;
}

std::vector<std::vector<size_t>>
classify(const std::vector<BinaryForm>& forms, const std::vector<unsigned>& ladder) {
    size_t n = forms.size();
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), size_t{0});
    auto find = [&](size_t x) {
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (find(i) == find(j)) continue;
            if (equivalence_filters(forms[i], forms[j])) continue;
            EquivalenceVerdict v = find_equivalence(forms[i], forms[j], ladder);
            if (v.status == VerdictStatus::Unknown)
                throw unknown_pair_error(forms[i].encode(), forms[j].encode());
            if (v.status == VerdictStatus::Equivalent)
                parent[find(j)] = find(i);
        }
    std::vector<std::vector<size_t>> classes;
    std::vector<long> slot(n, -1);
    for (size_t i = 0; i < n; ++i) {
        size_t root = find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<long>(classes.size());
            classes.emplace_back();
        }
        classes[static_cast<size_t>(slot[root])].push_back(i);
    }
    return classes;
}

std::string EquivalenceVerdict::to_json() const {
    std::ostringstream os;
    os << "{\"status\":\"";
    switch (status) {
        case VerdictStatus::Equivalent: os << "Equivalent"; break;
        case VerdictStatus::NotEquivalent: os << "NotEquivalent"; break;
        case VerdictStatus::Unknown: os << "Unknown"; break;
    }
    os << "\"";
    if (certificate) os << ",\"U\":\"" << certificate->encode() << "\"";
    if (!separating_invariant.empty())
        os << ",\"separating_invariant\":\"" << separating_invariant << "\"";
    if (status == VerdictStatus::Unknown)
        os << ",\"precision_exhausted\":" << precision_exhausted;
    os << ",\"matchings_tried\":" << matchings_tried << "}";
    return os.str();
}

} // namespace bfc
