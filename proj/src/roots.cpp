#include "bfc/roots.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <set>

namespace bfc {

namespace {

BigFloat pow2_inv(unsigned k, unsigned prec) {
    BigFloat e(1, prec);
    mpf_div_2exp(e.get_mpf_t(), e.get_mpf_t(), k);
    return e;
}

std::vector<BigComplex> complex_coeffs(const std::vector<Int>& cs, unsigned prec) {
    std::vector<BigComplex> out;
    out.reserve(cs.size());
    for (const Int& c : cs)
        out.push_back({BigFloat(c, prec), BigFloat(0, prec)});
    return out;
}

BigComplex eval_poly(const std::vector<BigComplex>& cs, const BigComplex& z) {
    BigComplex acc = cs[0];
    for (size_t i = 1; i < cs.size(); ++i) acc = acc * z + cs[i];
    return acc;
}

struct AberthResult {
    std::vector<BigComplex> zs;
    std::vector<BigFloat> radii;
    bool certified = false;
};

// Simultaneous Aberth-Ehrlich iteration on a squarefree univariate
// polynomial (descending coefficients, nonzero lead), followed by
// inclusion radii d*|f(z)|/|f'(z)| and a disk-disjointness check.
AberthResult aberth(const std::vector<Int>& coeffs, unsigned prec) {
    unsigned wp = prec + 64;
    int d = static_cast<int>(coeffs.size()) - 1;
    auto f = complex_coeffs(coeffs, wp);
    std::vector<BigComplex> fp(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        BigComplex c = BigComplex::zero(wp);
        c.re = f[static_cast<size_t>(i)].re * (d - i);
        c.im = f[static_cast<size_t>(i)].im * (d - i);
        fp[static_cast<size_t>(i)] = c;
    }

    // initial guesses on a circle; radius from a Cauchy-style bound
    double lead = std::abs(coeffs[0].get_d());
    double radius = 1.0;
    for (int i = 1; i <= d; ++i) {
        double q = std::abs(coeffs[static_cast<size_t>(i)].get_d()) / lead;
        if (q > radius) radius = q;
    }
    radius = std::min(1.0 + radius, 1e100);
    std::vector<BigComplex> z;
    for (int k = 0; k < d; ++k) {
        double ang = 2.0 * M_PI * (k + 0.35) / d + 0.1;
        z.push_back(BigComplex::with_prec(radius * std::cos(ang), radius * std::sin(ang), wp));
    }

    BigFloat eps = pow2_inv(prec + 8, wp);
    BigFloat eps2(0, wp);
    eps2 = eps * eps;
    int maxiter = 200 + static_cast<int>(prec);
    for (int iter = 0; iter < maxiter; ++iter) {
        bool converged = true;
        for (int k = 0; k < d; ++k) {
            BigComplex p = eval_poly(f, z[static_cast<size_t>(k)]);
            if (p.is_zero()) continue;
            BigComplex pp = eval_poly(fp, z[static_cast<size_t>(k)]);
            if (pp.is_zero()) {
                // nudge off a critical point
                z[static_cast<size_t>(k)] = z[static_cast<size_t>(k)] +
                    BigComplex::with_prec(1e-3, 1e-3, wp);
                converged = false;
                continue;
            }
            BigComplex ratio = p / pp;
            BigComplex sum = BigComplex::with_prec(0, 0, wp);
            for (int j = 0; j < d; ++j) {
                if (j == k) continue;
                BigComplex diff = z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)];
                if (diff.is_zero())
                    diff = BigComplex::with_prec(1e-20, 1e-20, wp);
                sum = sum + BigComplex{BigFloat(1, wp), BigFloat(0, wp)} / diff;
            }
            BigComplex denom = BigComplex{BigFloat(1, wp), BigFloat(0, wp)} - ratio * sum;
            BigComplex w = denom.is_zero() ? ratio : ratio / denom;
            z[static_cast<size_t>(k)] = z[static_cast<size_t>(k)] - w;
            BigFloat scale(z[static_cast<size_t>(k)].norm2());
            if (scale < 1) scale = 1;
            if (w.norm2() > eps2 * scale) converged = false;
        }
        if (converged) break;
    }

    AberthResult out;
    out.zs = z;
    out.radii.reserve(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
        BigComplex p = eval_poly(f, z[static_cast<size_t>(k)]);
        BigComplex pp = eval_poly(fp, z[static_cast<size_t>(k)]);
        if (pp.is_zero()) return out; // uncertified
        BigFloat rad(0, wp);
        rad = d * p.abs() / pp.abs();
        out.radii.push_back(rad);
    }
    BigFloat maxr(0, wp);
    for (const auto& r : out.radii)
        if (r > maxr) maxr = r;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            BigFloat sep((z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)]).abs());
            if (!(sep > 2 * maxr)) return out;
        }
    out.certified = true;
    return out;
}

} // namespace

BigFloat RootSet::max_radius() const {
    BigFloat m(0, precision_bits + 64);
    for (const auto& r : radii)
        if (r > m) m = r;
    return m;
}

BigFloat RootSet::min_separation() const {
    BigFloat best(0);
    bool seen = false;
    for (size_t i = 0; i < points.size(); ++i) {
        if (points[i].infinite) continue;
        for (size_t j = i + 1; j < points.size(); ++j) {
            if (points[j].infinite) continue;
            BigFloat s((points[i].z - points[j].z).abs());
            if (!seen || s < best) { best = s; seen = true; }
        }
    }
    return best;
}

RootSet roots(const BinaryForm& f, unsigned precision_bits, unsigned max_precision_bits) {
    if (discriminant(f) == 0) throw not_squarefree_error();
    int r = f.degree();
    size_t lz = 0;
    while (lz < f.coeffs().size() && f.coeffs()[lz] == 0) ++lz;
    std::vector<Int> uni(f.coeffs().begin() + static_cast<long>(lz), f.coeffs().end());
    int d = r - static_cast<int>(lz);

    std::vector<unsigned> ladder;
    for (unsigned p = precision_bits; p < max_precision_bits; p *= 2) ladder.push_back(p);
    ladder.push_back(max_precision_bits);
    for (unsigned prec : ladder) {
        RootSet rs;
        rs.precision_bits = prec;
        unsigned wp = prec + 64;
        bool ok = true;
        if (d >= 1) {
            if (d == 1) {
                Rat root(-uni[1], uni[0]);
                root.canonicalize();
                BigFloat re(0, wp);
                mpf_set_q(re.get_mpf_t(), root.get_mpq_t());
                rs.points.push_back(ProjectivePoint::finite({re, BigFloat(0, wp)}));
                rs.radii.emplace_back(0, wp);
            } else {
                AberthResult ar = aberth(uni, prec);
                if (!ar.certified) ok = false;
                else {
                    for (int k = 0; k < d; ++k) {
                        rs.points.push_back(ProjectivePoint::finite(ar.zs[static_cast<size_t>(k)]));
                        rs.radii.push_back(ar.radii[static_cast<size_t>(k)]);
                    }
                    // deterministic order: by (re, im)
                    std::vector<size_t> idx(rs.points.size());
                    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
                    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
                        int c = cmp(rs.points[a].z.re, rs.points[b].z.re);
                        if (c) return c < 0;
                        return cmp(rs.points[a].z.im, rs.points[b].z.im) < 0;
                    });
                    RootSet sorted;
                    sorted.precision_bits = prec;
                    for (size_t i : idx) {
                        sorted.points.push_back(rs.points[i]);
                        sorted.radii.push_back(rs.radii[i]);
                    }
                    rs = std::move(sorted);
                }
            }
        }
        if (ok) {
            for (int k = d; k < r; ++k) {
                rs.points.push_back(ProjectivePoint::inf());
                rs.radii.emplace_back(0, wp);
            }
            return rs;
        }
    }
    throw precision_exhausted_error("root separation not certified at " +
                                    std::to_string(max_precision_bits) + " bits");
}

BigComplex cross_ratio(const ProjectivePoint& p1, const ProjectivePoint& p2,
                       const ProjectivePoint& p3, const ProjectivePoint& p4) {
    const ProjectivePoint* ps[4] = {&p1, &p2, &p3, &p4};
    int ninf = 0;
    for (auto* p : ps)
        if (p->infinite) ++ninf;
    if (ninf > 1) throw degenerate_error("more than one point at infinity");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            bool same = (ps[i]->infinite && ps[j]->infinite) ||
                        (!ps[i]->infinite && !ps[j]->infinite &&
                         ps[i]->z.re == ps[j]->z.re && ps[i]->z.im == ps[j]->z.im);
            if (same) throw degenerate_error("cross ratio of non-distinct points");
        }
    const BigComplex &a1 = p1.z, &a2 = p2.z, &a3 = p3.z, &a4 = p4.z;
    if (p1.infinite) return (a3 - a4) / (a2 - a4);
    if (p2.infinite) return -((a3 - a4) / (a1 - a3));
    if (p3.infinite) return -((a1 - a2) / (a2 - a4));
    if (p4.infinite) return (a1 - a2) / (a1 - a3);
    return ((a1 - a2) * (a3 - a4)) / ((a1 - a3) * (a2 - a4));
}

namespace {

// round to `digits` decimals, as an integer scaled by 10^digits
Int quantize(const BigFloat& x, unsigned digits) {
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    BigFloat t(0, x.get_prec());
    t = x * BigFloat(scale, x.get_prec()) + BigFloat(0.5, x.get_prec());
    mpf_floor(t.get_mpf_t(), t.get_mpf_t());
    Int out;
    mpz_set_f(out.get_mpz_t(), t.get_mpf_t());
    return out;
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

std::vector<std::pair<std::string, std::string>> CrossRatioProfile::quantized() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(values.size());
    for (const BigComplex& v : values)
        out.emplace_back(quantize(v.re, quant_digits).get_str(),
                         quantize(v.im, quant_digits).get_str());
    std::sort(out.begin(), out.end());
    return out;
}

CrossRatioProfile cross_ratio_profile(const BinaryForm& f, unsigned precision_bits,
                                      unsigned quant_digits) {
    int r = f.degree();
    if (r < 4) throw degree_too_small_error("cross-ratio profile needs degree >= 4");
    RootSet rs = roots(f, precision_bits);
    unsigned wp = rs.precision_bits + 64;

    CrossRatioProfile prof;
    prof.quant_digits = quant_digits;
    prof.error_bound = BigFloat(0, wp);
    BigFloat maxrad = rs.max_radius();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                for (int l = 0; l < r; ++l) {
                    if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
                    const auto &pi = rs.points[static_cast<size_t>(i)],
                               &pj = rs.points[static_cast<size_t>(j)],
                               &pk = rs.points[static_cast<size_t>(k)],
                               &pl = rs.points[static_cast<size_t>(l)];
                    BigComplex cr = cross_ratio(pi, pj, pk, pl);
                    // first-order error: relative error of each finite
                    // difference factor is at most 2*maxrad/|factor|
                    BigFloat rel(0, wp);
                    auto add_factor = [&](const ProjectivePoint& a, const ProjectivePoint& b) {
                        if (a.infinite || b.infinite) return;
                        rel += 2 * maxrad / (a.z - b.z).abs();
                    };
                    add_factor(pi, pj); add_factor(pk, pl);
                    add_factor(pi, pk); add_factor(pj, pl);
                    BigFloat err(0, wp);
                    err = 4 * rel * (cr.abs() + 1);
                    if (err > prof.error_bound) prof.error_bound = err;
                    prof.values.push_back(cr);
                }
    std::string blob;
    for (const auto& [re, im] : prof.quantized()) {
        blob += re; blob += ','; blob += im; blob += ';';
    }
    prof.hash = fnv1a(blob);
    return prof;
}

bool profiles_consistent(const CrossRatioProfile& a, const CrossRatioProfile& b) {
    if (a.values.size() != b.values.size()) return false;
    BigFloat tol(2 * (a.error_bound + b.error_bound));
    // fallback floor so exactly-equal profiles at tiny error still match
    if (tol == 0) tol = BigFloat(1e-30);
    std::vector<bool> used(b.values.size(), false);
    for (const BigComplex& v : a.values) {
        bool found = false;
        for (size_t j = 0; j < b.values.size(); ++j) {
            if (used[j]) continue;
            if ((v - b.values[j]).abs() <= tol) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

// ------------------------------------------------- transform reconstruction

namespace {

struct CMat2 {
    BigComplex a, b, c, d;
    CMat2 inverse_up_to_scalar() const { return {d, -b, -c, a}; }
    CMat2 operator*(const CMat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

// Moebius map sending p1, p2, p3 to 0, 1, infinity.
CMat2 map_to_standard(const ProjectivePoint& p1, const ProjectivePoint& p2,
                      const ProjectivePoint& p3) {
    const BigComplex &z1 = p1.z, &z2 = p2.z, &z3 = p3.z;
    BigComplex one = {BigFloat(1), BigFloat(0)}, zero = {BigFloat(0), BigFloat(0)};
    if (p1.infinite) return {zero, z2 - z3, one, -z3};
    if (p2.infinite) return {one, -z1, one, -z3};
    if (p3.infinite) return {one, -z1, zero, z2 - z1};
    return {z2 - z3, -(z1 * (z2 - z3)), z2 - z1, -(z3 * (z2 - z1))};
}

// apply a complex Moebius matrix to a projective point
ProjectivePoint apply(const CMat2& t, const ProjectivePoint& p, const BigFloat& inf_eps) {
    BigComplex num, den;
    if (p.infinite) { num = t.a; den = t.c; }
    else { num = t.a * p.z + t.b; den = t.c * p.z + t.d; }
    BigFloat na = num.abs(), da = den.abs();
    if (da <= inf_eps * (na + da)) return ProjectivePoint::inf();
    return ProjectivePoint::finite(num / den);
}

// continued-fraction reconstruction of a rational p/q, q <= den_bound,
// from a float; empty when no convergent approximates well enough
std::optional<Rat> rationalize(const BigFloat& x, const Int& den_bound, const BigFloat& tol) {
    unsigned p = static_cast<unsigned>(x.get_prec());
    BigFloat rem(x, p);
    Int h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    for (int step = 0; step < 128; ++step) {
        BigFloat fl(0, p);
        mpf_floor(fl.get_mpf_t(), rem.get_mpf_t());
        Int a;
        mpz_set_f(a.get_mpz_t(), fl.get_mpf_t());
        Int h2 = a * h1 + h0, k2 = a * k1 + k0;
        if (k2 > den_bound) break;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        BigFloat frac(0, p);
        frac = rem - fl;
        Rat cand(h1, k1);
        cand.canonicalize();
        BigFloat cf(0, p);
        mpf_set_q(cf.get_mpf_t(), cand.get_mpq_t());
        BigFloat diff(0, p);
        diff = x - cf;
        if (diff < 0) diff = -diff;
        if (diff <= tol) return cand;
        if (frac == 0) break;
        rem = 1 / frac;
    }
    return std::nullopt;
}

} // namespace

TransformCandidates weak_transform_candidates(const BinaryForm& f, const BinaryForm& g,
                                              unsigned precision_bits,
                                              const TransformSearchOptions& opts) {
    int r = f.degree();
    if (r < 3) throw degree_too_small_error("transform reconstruction needs degree >= 3");
    if (g.degree() != r)
        throw degenerate_error("transform reconstruction needs equal degrees");
    RootSet rf = roots(f, precision_bits);
    RootSet rg = roots(g, precision_bits);
    unsigned wp = std::max(rf.precision_bits, rg.precision_bits) + 64;

    BigFloat inf_eps = pow2_inv(std::min(rf.precision_bits, rg.precision_bits) / 3, wp);
    BigFloat sep = rg.min_separation();
    BigFloat match_tol(0, wp);
    match_tol = sep / 4;
    BigFloat rat_tol = pow2_inv(std::min(rf.precision_bits, rg.precision_bits) / 3, wp);
    Int den_bound;
    mpz_ui_pow_ui(den_bound.get_mpz_t(), 10, opts.denominator_bound_exp10);

    TransformCandidates out;
    std::set<std::string> seen;
    CMat2 sf = map_to_standard(rf.points[0], rf.points[1], rf.points[2]);

    std::vector<int> gidx(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) gidx[static_cast<size_t>(i)] = i;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) {
                if (i == j || i == k || j == k) continue;
                ++out.matchings_tried;
                CMat2 sg = map_to_standard(rg.points[static_cast<size_t>(i)],
                                           rg.points[static_cast<size_t>(j)],
                                           rg.points[static_cast<size_t>(k)]);
                CMat2 t = sg.inverse_up_to_scalar() * sf;

                // the remaining roots of F must land on the unused roots of G
                std::vector<bool> used(static_cast<size_t>(r), false);
                used[static_cast<size_t>(i)] = used[static_cast<size_t>(j)] = used[static_cast<size_t>(k)] = true;
                bool full = true;
                for (int l = 3; l < r && full; ++l) {
                    ProjectivePoint w = apply(t, rf.points[static_cast<size_t>(l)], inf_eps);
                    bool matched = false;
                    for (int m = 0; m < r; ++m) {
                        if (used[static_cast<size_t>(m)]) continue;
                        const ProjectivePoint& q = rg.points[static_cast<size_t>(m)];
                        if (w.infinite || q.infinite) {
                            if (w.infinite && q.infinite) {
                                used[static_cast<size_t>(m)] = true;
                                matched = true;
                                break;
                            }
                            continue;
                        }
                        if ((w.z - q.z).abs() <= match_tol) {
                            used[static_cast<size_t>(m)] = true;
                            matched = true;
                            break;
                        }
                    }
                    if (!matched) full = false;
                }
                if (!full) continue;

                // normalize: first entry of significant modulus scaled to 1
                BigComplex entries[4] = {t.a, t.b, t.c, t.d};
                BigFloat maxmod(0, wp);
                for (auto& e : entries)
                    if (e.abs() > maxmod) maxmod = e.abs();
                if (maxmod == 0) { out.all_matchings_resolved = false; continue; }
                BigComplex lead;
                bool found_lead = false;
                for (auto& e : entries)
                    if (!found_lead && e.abs() > inf_eps * maxmod) { lead = e; found_lead = true; }
                Rat qe[4];
                bool rat_ok = true;
                for (int n = 0; n < 4 && rat_ok; ++n) {
                    BigComplex v = entries[n] / lead;
                    BigFloat imabs(v.im);
                    if (imabs < 0) imabs = -imabs;
                    BigFloat reabs(v.re);
                    if (reabs < 0) reabs = -reabs;
                    BigFloat vtol(0, wp);
                    vtol = rat_tol * (reabs + 1);
                    if (imabs > vtol) { rat_ok = false; break; }
                    if (reabs <= rat_tol) { qe[n] = 0; continue; }
                    auto q = rationalize(v.re, den_bound, vtol);
                    if (!q) { rat_ok = false; break; }
                    qe[n] = *q;
                }
                if (!rat_ok) { out.all_matchings_resolved = false; continue; }
                try {
                    RatMatrix2 tm = RatMatrix2::make(qe[0], qe[1], qe[2], qe[3]);
                    if (seen.insert(tm.encode()).second) out.maps.push_back(tm);
                } catch (const singular_matrix_error&) {
                    out.all_matchings_resolved = false;
                }
            }
    return out;
}

std::optional<WeakEquivalence>
weak_equivalence_transform(const BinaryForm& f, const BinaryForm& g,
                           unsigned precision_bits,
                           const TransformSearchOptions& opts) {
    TransformCandidates cands = weak_transform_candidates(f, g, precision_bits, opts);
    for (const RatMatrix2& t : cands.maps) {
        RatBinaryForm h = transform(f, t.inverse());
        size_t lead = 0;
        while (lead < h.coeffs().size() && h.coeffs()[lead] == 0) ++lead;
        if (lead == h.coeffs().size()) continue;
        if (g.coeff(static_cast<int>(lead)) == 0) continue;
        Rat lambda = Rat(g.coeff(static_cast<int>(lead))) / h.coeffs()[lead];
        lambda.canonicalize();
        bool exact = true;
        for (size_t n = 0; n < h.coeffs().size(); ++n)
            if (lambda * h.coeffs()[n] != Rat(g.coeff(static_cast<int>(n)))) { exact = false; break; }
        if (exact) return WeakEquivalence{t, lambda};
    }
    return std::nullopt;
}

} // namespace bfc
