#include "bfc/order.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace bfc {

namespace {

// ---- univariate rational polynomials, ascending coefficients ----

using RPoly = std::vector<Rat>;

void rp_trim(RPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly rp_mul(const RPoly& a, const RPoly& b) {
    if (a.empty() || b.empty()) return {};
    RPoly out(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    rp_trim(out);
    return out;
}

// remainder of a modulo b (b nonzero)
RPoly rp_mod(RPoly a, const RPoly& b) {
    rp_trim(a);
    while (a.size() >= b.size()) {
        Rat q = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= q * b[i];
        rp_trim(a);
    }
    return a;
}

// extended gcd: returns (g, s) with s*a = g (mod m), g the monic gcd
std::pair<RPoly, RPoly> rp_half_ext_gcd(RPoly a, RPoly m) {
    RPoly r0 = std::move(m), r1 = std::move(a);
    rp_trim(r0); rp_trim(r1);
    RPoly s0 = {}, s1 = {Rat(1)};
    while (!r1.empty()) {
        // quotient of r0 by r1
        RPoly q(r0.size() > r1.size() ? r0.size() - r1.size() + 1 : 1, Rat(0));
        RPoly rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rat c = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] += c;
            for (size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] -= c * r1[i];
            rp_trim(rem);
        }
        rp_trim(q);
        RPoly s2 = s0;
        RPoly qs = rp_mul(q, s1);
        if (s2.size() < qs.size()) s2.resize(qs.size(), Rat(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        rp_trim(s2);
        r0 = std::move(r1); r1 = std::move(rem);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    // normalize gcd monic
    if (!r0.empty() && r0.back() != 1) {
        Rat lc = r0.back();
        for (auto& c : r0) c /= lc;
        for (auto& c : s0) c /= lc;
    }
    return {r0, s0};
}

// inverse of a modulo the monic m; throws when gcd != 1
RPoly rp_inv_mod(const RPoly& a, const RPoly& m) {
    auto [g, s] = rp_half_ext_gcd(a, m);
    if (g.size() != 1)
        throw degenerate_error("non-invertible element modulo the minimal polynomial");
    return rp_mod(std::move(s), m);
}

RPoly rp_mulmod(const RPoly& a, const RPoly& b, const RPoly& m) {
    return rp_mod(rp_mul(a, b), m);
}

// ---- polynomials over F_p (p < 2^31), ascending, for the degree sieve ----

using MPoly = std::vector<std::uint64_t>;

std::uint64_t p_inv(std::uint64_t a, std::uint64_t p) {
    std::uint64_t r = 1, e = p - 2, base = a % p;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

void mp_trim(MPoly& f) { while (!f.empty() && f.back() == 0) f.pop_back(); }

MPoly mp_mul(const MPoly& a, const MPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    MPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    mp_trim(out);
    return out;
}

MPoly mp_mod(MPoly a, const MPoly& b, std::uint64_t p) {
    mp_trim(a);
    std::uint64_t inv = p_inv(b.back(), p);
    while (a.size() >= b.size()) {
        std::uint64_t c = a.back() * inv % p;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = (a[shift + i] + p - c * b[i] % p) % p;
        mp_trim(a);
    }
    return a;
}

MPoly mp_gcd(MPoly a, MPoly b, std::uint64_t p) {
    mp_trim(a); mp_trim(b);
    while (!b.empty()) {
        MPoly r = mp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::uint64_t inv = p_inv(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

MPoly mp_powmod_x(std::uint64_t e, const MPoly& m, std::uint64_t p) {
    MPoly base = mp_mod(MPoly{0, 1}, m, p);
    MPoly r = {1};
    while (e) {
        if (e & 1) r = mp_mod(mp_mul(r, base, p), m, p);
        base = mp_mod(mp_mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

MPoly mp_powmod(const MPoly& f, std::uint64_t e, const MPoly& m, std::uint64_t p) {
    MPoly base = mp_mod(f, m, p);
    MPoly r = {1};
    while (e) {
        if (e & 1) r = mp_mod(mp_mul(r, base, p), m, p);
        base = mp_mod(mp_mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

MPoly mp_derivative(const MPoly& f, std::uint64_t p) {
    MPoly d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * (i % p) % p);
    mp_trim(d);
    return d;
}

// distinct-degree split of a squarefree f mod p; returns the multiset of
// irreducible factor degrees
std::vector<int> mp_factor_degrees(MPoly f, std::uint64_t p) {
    std::vector<int> degs;
    MPoly w = mp_powmod_x(p, f, p);   // x^p mod f
    MPoly frob = w;
    int i = 1;
    while (static_cast<int>(f.size()) - 1 >= 2 * i) {
        MPoly wx = w;
        if (wx.size() < 2) wx.resize(2, 0);
        wx[1] = (wx[1] + p - 1) % p;
        mp_trim(wx);
        MPoly g = mp_gcd(f, wx, p);
        int gd = static_cast<int>(g.size()) - 1;
        for (int k = 0; k < gd / i; ++k) degs.push_back(i);
        if (gd > 0) {
            // divide out
            MPoly q, rem = f;
            // f = q*g exactly
            std::uint64_t inv = p_inv(g.back(), p);
            q.assign(f.size() - g.size() + 1, 0);
            while (rem.size() >= g.size() && !rem.empty()) {
                std::uint64_t c = rem.back() * inv % p;
                size_t shift = rem.size() - g.size();
                q[shift] = c;
                for (size_t t = 0; t < g.size(); ++t)
                    rem[shift + t] = (rem[shift + t] + p - c * g[t] % p) % p;
                mp_trim(rem);
            }
            f = q;
            mp_trim(f);
        }
        ++i;
        w = mp_powmod(w, p, f.empty() ? MPoly{1} : f, p);
        (void)frob;
    }
    if (f.size() > 1) degs.push_back(static_cast<int>(f.size()) - 1);
    return degs;
}

// ---- exact Kronecker factor search ----

std::vector<Int> divisors_signed(const Int& v) {
    std::vector<Int> out;
    Int a = v < 0 ? Int(-v) : v;
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            Int q = a / d;
            if (q != d) out.push_back(q);
        }
    }
    size_t n = out.size();
    for (size_t i = 0; i < n; ++i) out.push_back(-out[i]);
    return out;
}

Int eval_at(const std::vector<Int>& desc, const Int& x) {
    Int acc = 0;
    for (const Int& c : desc) acc = acc * x + c;
    return acc;
}

// does a degree-d integer factor of the primitive polynomial exist?
// `desc` holds descending coefficients, degree >= 2, squarefree content 1.
bool has_factor_of_degree(const std::vector<Int>& desc, int d) {
    std::vector<Int> xs;
    for (int k = 0; static_cast<int>(xs.size()) <= d; ++k) {
        Int x = (k % 2 == 0) ? Int(k / 2) : Int(-(k / 2 + 1));
        xs.push_back(x);
    }
    std::vector<std::vector<Int>> divs;
    for (const Int& x : xs) {
        Int v = eval_at(desc, x);
        if (v == 0) return true;   // linear factor (x - x0)
        divs.push_back(divisors_signed(v));
    }
    // Lagrange interpolation through the chosen divisor at each node;
    // a candidate must have integer coefficients and divide exactly.
    std::vector<size_t> pick(xs.size(), 0);
    auto interpolate = [&]() -> std::vector<Rat> {
        std::vector<Rat> acc(xs.size(), Rat(0));
        for (size_t i = 0; i < xs.size(); ++i) {
            // basis polynomial prod_{j!=i} (X - x_j)/(x_i - x_j)
            std::vector<Rat> num = {Rat(1)};
            Rat den = 1;
            for (size_t j = 0; j < xs.size(); ++j) {
                if (j == i) continue;
                std::vector<Rat> next(num.size() + 1, Rat(0));
                for (size_t t = 0; t < num.size(); ++t) {
                    next[t + 1] += num[t];
                    next[t] -= num[t] * Rat(xs[j]);
                }
                num = std::move(next);
                den *= Rat(xs[i]) - Rat(xs[j]);
            }
            Rat w = Rat(divs[i][pick[i]]) / den;
            for (size_t t = 0; t < num.size(); ++t) acc[t] += w * num[t];
        }
        return acc;  // ascending, length d+1
    };
    auto divides = [&](const std::vector<Int>& g_desc) -> bool {
        // exact division of desc by g_desc over Q, integer check implicit
        std::vector<Rat> rem(desc.begin(), desc.end());
        std::vector<Rat> gd(g_desc.begin(), g_desc.end());
        while (rem.size() >= gd.size()) {
            if (rem[0] == 0) { rem.erase(rem.begin()); continue; }
            Rat c = rem[0] / gd[0];
            for (size_t i = 0; i < gd.size(); ++i) rem[i] -= c * gd[i];
            if (rem[0] != 0) return false;
            rem.erase(rem.begin());
        }
        for (const Rat& c : rem)
            if (c != 0) return false;
        return true;
    };
    for (;;) {
        std::vector<Rat> cand = interpolate();
        bool ok = cand[static_cast<size_t>(d)] != 0;
        std::vector<Int> g_desc;
        if (ok) {
            for (int t = d; t >= 0; --t) {
                const Rat& c = cand[static_cast<size_t>(t)];
                if (c.get_den() != 1) { ok = false; break; }
                g_desc.push_back(c.get_num());
            }
        }
        if (ok && divides(g_desc)) return true;
        // next divisor combination
        size_t pos = 0;
        while (pos < pick.size()) {
            if (++pick[pos] < divs[pos].size()) break;
            pick[pos] = 0;
            ++pos;
        }
        if (pos == pick.size()) return false;
    }
}

} // namespace

bool irreducible(const BinaryForm& f) {
    int r = f.degree();
    if (r < 1) return false;
    if (r == 1) return true;
    if (f.coeff(0) == 0) return false;  // Y divides
    // primitive univariate F(X,1)
    std::vector<Int> u = f.coeffs();
    Int c = content(f);
    for (auto& a : u) a /= c;

    // factor-degree sieve: subset sums of modular degree patterns
    // constrain the possible proper factor degrees
    std::uint32_t possible = (1u << static_cast<unsigned>(r)) - 2u;  // degrees 1..r-1
    static const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    int used = 0;
    for (std::uint64_t p : primes) {
        if (used >= 5 || possible == 0) break;
        MPoly fp;
        for (auto it = u.rbegin(); it != u.rend(); ++it) {
            Int m = *it % static_cast<long>(p);
            if (m < 0) m += static_cast<long>(p);
            fp.push_back(m.get_ui());
        }
        mp_trim(fp);
        if (static_cast<int>(fp.size()) - 1 != r) continue;        // leading drop
        if (mp_gcd(fp, mp_derivative(fp, p), p).size() > 1) continue;  // not squarefree mod p
        std::vector<int> degs = mp_factor_degrees(fp, p);
        std::uint32_t sums = 1u;  // bit k <=> some sub-product has degree k
        for (int d : degs) sums |= sums << static_cast<unsigned>(d);
        possible &= sums;
        ++used;
    }
    if (possible == 0 && used > 0) return true;

    for (int d = 1; 2 * d <= r; ++d) {
        if (used > 0 && !((possible >> static_cast<unsigned>(d)) & 1u)) continue;
        if (has_factor_of_degree(u, d)) return false;
    }
    return true;
}

OrderPresentation invariant_order(const BinaryForm& f) {
    int r = f.degree();
    if (r < 2) throw degree_too_small_error("invariant order needs degree >= 2");
    if (!irreducible(f)) throw reducible_error(f.encode());

    OrderPresentation o;
    o.degree = r;
    o.minimal_poly.assign(static_cast<size_t>(r) + 1, Rat(0));
    for (int i = 0; i <= r; ++i)
        o.minimal_poly[static_cast<size_t>(r - i)] = Rat(f.coeff(i)) / Rat(f.coeff(0));

    o.basis.assign(static_cast<size_t>(r), std::vector<Rat>(static_cast<size_t>(r), Rat(0)));
    o.basis[0][0] = 1;
    for (int k = 1; k < r; ++k)   // w_{k+1} = a0 t^k + a1 t^{k-1} + ... + a_{k-1} t
        for (int i = 0; i < k; ++i)
            o.basis[static_cast<size_t>(k)][static_cast<size_t>(k - i)] = Rat(f.coeff(i));

    // inverse of the (triangular) basis matrix: solve x * B = e_j columns
    // via products in Q[t]/(m): reduce w_i w_j, then express in the basis
    std::vector<std::vector<Rat>> binv(static_cast<size_t>(r),
                                       std::vector<Rat>(static_cast<size_t>(r), Rat(0)));
    {
        // back-substitution using the triangular structure: row k has
        // leading power t^k with coefficient a0 (k >= 1), row 0 is 1.
        for (int j = 0; j < r; ++j) {
            // express t^j in the basis
            std::vector<Rat> x(static_cast<size_t>(r), Rat(0));
            std::vector<Rat> rem(static_cast<size_t>(r), Rat(0));
            rem[static_cast<size_t>(j)] = 1;
            for (int k = r - 1; k >= 1; --k) {
                Rat lead = o.basis[static_cast<size_t>(k)][static_cast<size_t>(k)];
                Rat q = rem[static_cast<size_t>(k)] / lead;
                x[static_cast<size_t>(k)] = q;
                for (int t = 0; t < r; ++t)
                    rem[static_cast<size_t>(t)] -= q * o.basis[static_cast<size_t>(k)][static_cast<size_t>(t)];
            }
            x[0] = rem[0];
            for (int k = 0; k < r; ++k)
                binv[static_cast<size_t>(j)][static_cast<size_t>(k)] = x[static_cast<size_t>(k)];
        }
    }

    o.structure.assign(static_cast<size_t>(r),
                       std::vector<std::vector<Int>>(static_cast<size_t>(r),
                                                     std::vector<Int>(static_cast<size_t>(r), Int(0))));
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            RPoly prod = rp_mod(rp_mul(o.basis[static_cast<size_t>(i)],
                                       o.basis[static_cast<size_t>(j)]),
                                o.minimal_poly);
            prod.resize(static_cast<size_t>(r), Rat(0));
            for (int k = 0; k < r; ++k) {
                Rat c = 0;
                for (int t = 0; t < r; ++t)
                    c += prod[static_cast<size_t>(t)] *
                         binv[static_cast<size_t>(t)][static_cast<size_t>(k)];
                c.canonicalize();
                if (c.get_den() != 1)
                    throw closure_violation_error(f.encode());
                o.structure[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] = c.get_num();
                o.structure[static_cast<size_t>(j)][static_cast<size_t>(i)][static_cast<size_t>(k)] = c.get_num();
            }
        }
    return o;
}

Int order_discriminant(const OrderPresentation& o) {
    int r = o.degree;
    // Tr(w_k) from the multiplication matrix encoded in the constants
    std::vector<Int> tr(static_cast<size_t>(r), Int(0));
    for (int k = 0; k < r; ++k)
        for (int j = 0; j < r; ++j)
            tr[static_cast<size_t>(k)] += o.structure[static_cast<size_t>(k)][static_cast<size_t>(j)][static_cast<size_t>(j)];
    std::vector<std::vector<Int>> gram(static_cast<size_t>(r),
                                       std::vector<Int>(static_cast<size_t>(r), Int(0)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Int t = 0;
            for (int k = 0; k < r; ++k)
                t += o.structure[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] *
                     tr[static_cast<size_t>(k)];
            gram[static_cast<size_t>(i)][static_cast<size_t>(j)] = t;
        }
    return det_bareiss(std::move(gram));
}

namespace {

// row-style Hermite normal form of a full-rank square integer matrix
std::vector<std::vector<Int>> hnf(std::vector<std::vector<Int>> m) {
    size_t n = m.size();
    for (size_t col = 0; col < n; ++col) {
        // clear below the pivot with gcd row operations
        for (size_t row = col + 1; row < n; ++row) {
            while (m[row][col] != 0) {
                if (m[col][col] == 0 ||
                    (m[row][col] != 0 && abs(m[row][col]) < abs(m[col][col])))
                    std::swap(m[col], m[row]);
                if (m[row][col] == 0) break;
                Int q = m[row][col] / m[col][col];
                for (size_t t = 0; t < n; ++t)
                    m[row][t] -= q * m[col][t];
            }
        }
        if (m[col][col] < 0)
            for (size_t t = 0; t < n; ++t) m[col][t] = -m[col][t];
        // reduce entries above the pivot into [0, pivot)
        for (size_t row = 0; row < col; ++row) {
            if (m[col][col] == 0) continue;
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m[row][col].get_mpz_t(), m[col][col].get_mpz_t());
            for (size_t t = 0; t < n; ++t)
                m[row][t] -= q * m[col][t];
        }
    }
    return m;
}

std::vector<std::vector<Int>> cleared_basis(const OrderPresentation& a, const Int& lcm) {
    size_t r = static_cast<size_t>(a.degree);
    std::vector<std::vector<Int>> m(r, std::vector<Int>(r));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            Rat v = a.basis[i][j] * Rat(lcm);
            v.canonicalize();
            m[i][j] = v.get_num();
        }
    return m;
}

} // namespace

bool order_equal(const OrderPresentation& a, const OrderPresentation& b) {
    if (a.degree != b.degree || a.minimal_poly != b.minimal_poly)
        throw field_mismatch_error();
    Int lcm = 1;
    for (const auto& row : a.basis)
        for (const auto& v : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    for (const auto& row : b.basis)
        for (const auto& v : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    return hnf(cleared_basis(a, lcm)) == hnf(cleared_basis(b, lcm));
}

namespace {

// characteristic polynomial det(xI - M) of an integer matrix, by
// interpolation through x = 0..n with the fraction-free determinant
std::vector<Int> charpoly(const std::vector<std::vector<Int>>& m) {
    size_t n = m.size();
    std::vector<Int> xs, ys;
    for (size_t t = 0; t <= n; ++t) {
        std::vector<std::vector<Int>> a = m;
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) a[i][j] = -a[i][j];
            a[i][i] += Int(static_cast<long>(t));
        }
        xs.push_back(Int(static_cast<long>(t)));
        ys.push_back(det_bareiss(std::move(a)));
    }
    std::vector<Rat> acc(n + 1, Rat(0));
    for (size_t i = 0; i <= n; ++i) {
        std::vector<Rat> num = {Rat(1)};
        Rat den = 1;
        for (size_t j = 0; j <= n; ++j) {
            if (j == i) continue;
            std::vector<Rat> next(num.size() + 1, Rat(0));
            for (size_t t = 0; t < num.size(); ++t) {
                next[t + 1] += num[t];
                next[t] -= num[t] * Rat(xs[j]);
            }
            num = std::move(next);
            den *= Rat(xs[i]) - Rat(xs[j]);
        }
        Rat w = Rat(ys[i]) / den;
        for (size_t t = 0; t < num.size(); ++t) acc[t] += w * num[t];
    }
    std::vector<Int> out(n + 1);
    for (size_t t = 0; t <= n; ++t) {
        acc[t].canonicalize();
        out[t] = acc[t].get_num();  // denominators are 1 by construction
    }
    return out;
}

} // namespace

std::vector<std::vector<Int>> order_fingerprint(const OrderPresentation& o, int height_bound) {
    int r = o.degree;
    std::vector<std::vector<Int>> result;
    std::vector<long> x(static_cast<size_t>(r), -height_bound);
    for (;;) {
        std::vector<std::vector<Int>> mul(static_cast<size_t>(r),
                                          std::vector<Int>(static_cast<size_t>(r), Int(0)));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                for (int k = 0; k < r; ++k)
                    mul[static_cast<size_t>(j)][static_cast<size_t>(k)] +=
                        Int(x[static_cast<size_t>(i)]) *
                        o.structure[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
        result.push_back(charpoly(mul));
        size_t pos = 0;
        while (pos < x.size()) {
            if (++x[pos] <= height_bound) break;
            x[pos] = -height_bound;
            ++pos;
        }
        if (pos == x.size()) break;
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<Rat> theta_image(const IntMatrix2& u, const std::vector<Rat>& min_poly) {
    if (u.det() == 0) throw singular_matrix_error();
    size_t r = min_poly.size() - 1;
    RPoly num = {Rat(-u.b), Rat(u.d)};
    RPoly den = {Rat(u.a), Rat(-u.c)};
    rp_trim(num); rp_trim(den);
    RPoly inv = rp_inv_mod(den, min_poly);
    RPoly out = rp_mulmod(num, inv, min_poly);
    out.resize(r, Rat(0));
    return out;
}

OrderPresentation rebase(const OrderPresentation& o,
                         const std::vector<Rat>& new_min_poly,
                         const std::vector<Rat>& theta_map) {
    size_t r = new_min_poly.size() - 1;
    OrderPresentation out;
    out.degree = static_cast<int>(r);
    out.minimal_poly = new_min_poly;
    out.structure = o.structure;
    out.basis.assign(r, std::vector<Rat>(r, Rat(0)));
    for (size_t i = 0; i < o.basis.size(); ++i) {
        // Horner evaluation of the row polynomial at theta_map, mod new m
        RPoly acc;
        for (size_t j = o.basis[i].size(); j-- > 0;) {
            acc = rp_mulmod(acc, theta_map, new_min_poly);
            if (acc.empty()) acc = {Rat(0)};
            acc[0] += o.basis[i][j];
            rp_trim(acc);
        }
        acc.resize(r, Rat(0));
        out.basis[i] = acc;
    }
    return out;
}

std::string OrderPresentation::to_json() const {
    std::ostringstream os;
    auto rat = [](const Rat& q) { return '"' + rat_to_string(q) + '"'; };
    os << "{\"degree\":" << degree << ",\"minimal_poly\":[";
    for (size_t i = 0; i < minimal_poly.size(); ++i)
        os << (i ? "," : "") << rat(minimal_poly[i]);
    os << "],\"basis\":[";
    for (size_t i = 0; i < basis.size(); ++i) {
        os << (i ? ",[" : "[");
        for (size_t j = 0; j < basis[i].size(); ++j)
            os << (j ? "," : "") << rat(basis[i][j]);
        os << "]";
    }
    os << "],\"structure\":[";
    for (size_t i = 0; i < structure.size(); ++i) {
        os << (i ? ",[" : "[");
        for (size_t j = 0; j < structure[i].size(); ++j) {
            os << (j ? ",[" : "[");
            for (size_t k = 0; k < structure[i][j].size(); ++k)
                os << (k ? "," : "") << '"' << structure[i][j][k].get_str() << '"';
            os << "]";
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

} // namespace bfc
