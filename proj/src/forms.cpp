#include "bfc/forms.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace bfc {

// ---------------------------------------------------------------- BinaryForm

BinaryForm::BinaryForm(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw all_zero_error();
    bool any = false;
    for (const Int& c : coeffs_)
        if (c != 0) { any = true; break; }
    if (!any) throw all_zero_error();
}

Int BinaryForm::eval(const Int& x, const Int& y) const {
    // Horner in x with a running power of y.
    Int acc = coeffs_[0], ypow = 1;
    for (size_t i = 1; i < coeffs_.size(); ++i) {
        ypow *= y;
        acc = acc * x + coeffs_[i] * ypow;
    }
    return acc;
}

std::string BinaryForm::encode() const {
    std::ostringstream os;
    os << degree() << ':';
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i].get_str();
    }
    return os.str();
}

static Int parse_int_strict(const std::string& s) {
    if (s.empty()) throw parse_error("empty integer");
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw parse_error("bad integer: " + s);
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw parse_error("bad integer: " + s);
    return Int(s);
}

BinaryForm BinaryForm::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw parse_error("form encoding must be r:a0,...,ar");
    Int r = parse_int_strict(text.substr(0, colon));
    if (r < 0 || !r.fits_sint_p())
        throw parse_error("bad degree in form encoding");
    std::vector<Int> cs;
    std::string rest = text.substr(colon + 1);
    std::istringstream is(rest);
    std::string tok;
    while (std::getline(is, tok, ','))
        cs.push_back(parse_int_strict(tok));
    if (!rest.empty() && rest.back() == ',')
        throw parse_error("trailing comma in form encoding");
    if (static_cast<long>(cs.size()) != r.get_si() + 1)
        throw parse_error("form encoding degree/coefficient count mismatch");
    return BinaryForm(std::move(cs));
}

bool BinaryForm::operator<(const BinaryForm& o) const {
    if (coeffs_.size() != o.coeffs_.size())
        return coeffs_.size() < o.coeffs_.size();
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        int c = cmp(coeffs_[i], o.coeffs_[i]);
        if (c) return c < 0;
    }
    return false;
}

// ------------------------------------------------------------- RatBinaryForm

RatBinaryForm::RatBinaryForm(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw all_zero_error();
    bool any = false;
    for (const Rat& c : coeffs_)
        if (c != 0) { any = true; break; }
    if (!any) throw all_zero_error();
    for (Rat& c : coeffs_) c.canonicalize();
}

RatBinaryForm::RatBinaryForm(const BinaryForm& f)
    : RatBinaryForm([&] {
          std::vector<Rat> cs;
          cs.reserve(f.coeffs().size());
          for (const Int& c : f.coeffs()) cs.emplace_back(c);
          return cs;
      }()) {}

bool RatBinaryForm::is_integral() const {
    for (const Rat& c : coeffs_)
        if (c.get_den() != 1) return false;
    return true;
}

BinaryForm RatBinaryForm::to_integer() const {
    assert(is_integral());
    std::vector<Int> cs;
    cs.reserve(coeffs_.size());
    for (const Rat& c : coeffs_) cs.push_back(c.get_num());
    return BinaryForm(std::move(cs));
}

std::pair<Rat, BinaryForm> RatBinaryForm::primitive_part() const {
    Int den = 1;
    for (const Rat& c : coeffs_)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> cs;
    cs.reserve(coeffs_.size());
    for (const Rat& c : coeffs_) {
        Rat scaled = c * den;
        cs.push_back(scaled.get_num());
    }
    Int g = 0;
    for (const Int& c : cs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    // sign convention: first nonzero coefficient positive
    int sign = 1;
    for (const Int& c : cs)
        if (c != 0) { sign = (c > 0) ? 1 : -1; break; }
    g *= sign;
    for (Int& c : cs) c /= g;
    Rat scalar(g, den);
    scalar.canonicalize();
    return {scalar, BinaryForm(std::move(cs))};
}

// ------------------------------------------------------------------ matrices

std::string IntMatrix2::encode() const {
    return a.get_str() + "," + b.get_str() + ";" + c.get_str() + "," + d.get_str();
}

IntMatrix2 IntMatrix2::parse(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos)
        throw parse_error("matrix encoding must be a,b;c,d");
    auto row = [](const std::string& s) {
        auto comma = s.find(',');
        if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
            throw parse_error("matrix row must be two integers");
        return std::pair<Int, Int>(parse_int_strict(s.substr(0, comma)),
                                   parse_int_strict(s.substr(comma + 1)));
    };
    auto [a, b] = row(text.substr(0, semi));
    auto [c, d] = row(text.substr(semi + 1));
    return IntMatrix2{a, b, c, d};
}

RatMatrix2 RatMatrix2::make(Rat a, Rat b, Rat c, Rat d) {
    if (a * d - c * b == 0) throw singular_matrix_error();
    Rat lead = (a != 0) ? a : (b != 0) ? b : (c != 0) ? c : d;
    RatMatrix2 m{a / lead, b / lead, c / lead, d / lead};
    m.a.canonicalize(); m.b.canonicalize(); m.c.canonicalize(); m.d.canonicalize();
    return m;
}

RatMatrix2 RatMatrix2::from_int(const IntMatrix2& u) {
    return make(Rat(u.a), Rat(u.b), Rat(u.c), Rat(u.d));
}

RatMatrix2 RatMatrix2::inverse() const {
    return make(d, -b, -c, a);
}

RatMatrix2 RatMatrix2::operator*(const RatMatrix2& o) const {
    return make(a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d);
}

IntMatrix2 RatMatrix2::primitive_integer() const {
    Int den = 1;
    const Rat* es[4] = {&a, &b, &c, &d};
    for (auto* e : es)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e->get_den().get_mpz_t());
    Rat ra = a * den, rb = b * den, rc = c * den, rd = d * den;
    Int va(ra.get_num()), vb(rb.get_num()), vc(rc.get_num()), vd(rd.get_num());
    Int g = 0;
    for (const Int* v : {&va, &vb, &vc, &vd})
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v->get_mpz_t());
    return {va / g, vb / g, vc / g, vd / g};
}

std::string RatMatrix2::encode() const {
    return rat_to_string(a) + "," + rat_to_string(b) + ";" +
           rat_to_string(c) + "," + rat_to_string(d);
}

// --------------------------------------------------------------- operations

BinaryForm make_form(const std::vector<Int>& coeffs) { return BinaryForm(coeffs); }

Int content(const BinaryForm& f) {
    Int g = 0;
    for (const Int& c : f.coeffs())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

// Sylvester determinant of two univariate polynomials given by their
// coefficient vectors (descending powers) at declared degrees m, n.
static Int sylvester_resultant(const std::vector<Int>& f, int m,
                               const std::vector<Int>& g, int n) {
    int size = m + n;
    if (size == 0) return Int(1);
    std::vector<std::vector<Int>> mat(static_cast<size_t>(size),
                                      std::vector<Int>(static_cast<size_t>(size), Int(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j)
            mat[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = f[static_cast<size_t>(j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j)
            mat[static_cast<size_t>(n + i)][static_cast<size_t>(i + j)] = g[static_cast<size_t>(j)];
    return det_bareiss(std::move(mat));
}

Int discriminant(const BinaryForm& f) {
    int r = f.degree();
    if (r < 1) throw degree_too_small_error("discriminant needs degree >= 1");
    if (r == 1) return Int(1);

    // Make the leading coefficient nonzero by a det-1 substitution
    // (X,Y) -> (X, tX+Y); the det-power transformation law leaves the
    // discriminant unchanged when det = 1.
    const BinaryForm* g = &f;
    BinaryForm shifted = f;
    if (f.coeff(0) == 0) {
        for (int t = 1; t <= r + 1; ++t) {
            IntMatrix2 u{Int(1), Int(0), Int(t), Int(1)};
            shifted = transform(f, u);
            if (shifted.coeff(0) != 0) break;
        }
        g = &shifted;
    }
    const std::vector<Int>& a = g->coeffs();
    std::vector<Int> deriv(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i)
        deriv[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] * (r - i);
    Int res = sylvester_resultant(a, r, deriv, r - 1);
    Int disc = res / a[0];
    if (((static_cast<long>(r) * (r - 1)) / 2) % 2 != 0) disc = -disc;
    return disc;
}

// Expansion of F(aX+bY, cX+dY) over any exact coefficient ring.
template <typename T>
static std::vector<T> expand_transform(const std::vector<T>& coeffs,
                                       const T& a, const T& b, const T& c, const T& d) {
    int r = static_cast<int>(coeffs.size()) - 1;
    size_t n = coeffs.size();
    // powers[k] = (aX+bY)^k, qowers[k] = (cX+dY)^k as dense coefficient rows
    std::vector<std::vector<T>> pw(n), qw(n);
    pw[0] = {T(1)};
    qw[0] = {T(1)};
    for (size_t k = 1; k < n; ++k) {
        pw[k].assign(k + 1, T(0));
        qw[k].assign(k + 1, T(0));
        for (size_t j = 0; j < k; ++j) {
            pw[k][j] += pw[k - 1][j] * a;
            pw[k][j + 1] += pw[k - 1][j] * b;
            qw[k][j] += qw[k - 1][j] * c;
            qw[k][j + 1] += qw[k - 1][j] * d;
        }
    }
    std::vector<T> out(n, T(0));
    for (int i = 0; i <= r; ++i) {
        const auto& p = pw[static_cast<size_t>(r - i)];
        const auto& q = qw[static_cast<size_t>(i)];
        for (size_t j = 0; j < p.size(); ++j)
            for (size_t k = 0; k < q.size(); ++k)
                out[j + k] += coeffs[static_cast<size_t>(i)] * p[j] * q[k];
    }
    return out;
}

BinaryForm transform(const BinaryForm& f, const IntMatrix2& u) {
    if (u.det() == 0) throw singular_matrix_error();
    return BinaryForm(expand_transform<Int>(f.coeffs(), u.a, u.b, u.c, u.d));
}

RatBinaryForm transform(const RatBinaryForm& f, const RatMatrix2& t) {
    if (t.det() == 0) throw singular_matrix_error();
    return RatBinaryForm(expand_transform<Rat>(f.coeffs(), t.a, t.b, t.c, t.d));
}

RatBinaryForm transform(const BinaryForm& f, const RatMatrix2& t) {
    return transform(RatBinaryForm(f), t);
}

Int resultant(const BinaryForm& f, const BinaryForm& g) {
    int r = f.degree(), s = g.degree();
    if (r < 1 || s < 1) throw degree_too_small_error("resultant needs degrees >= 1");
    return sylvester_resultant(f.coeffs(), r, g.coeffs(), s);
}

BinaryForm multiply(const BinaryForm& f, const BinaryForm& g) {
    std::vector<Int> out(f.coeffs().size() + g.coeffs().size() - 1, Int(0));
    for (size_t i = 0; i < f.coeffs().size(); ++i)
        for (size_t j = 0; j < g.coeffs().size(); ++j)
            out[i + j] += f.coeffs()[i] * g.coeffs()[j];
    return BinaryForm(std::move(out));
}

DiscriminantProductIdentity discriminant_product(const std::vector<BinaryForm>& factors) {
    assert(!factors.empty());
    BinaryForm prod = factors[0];
    for (size_t i = 1; i < factors.size(); ++i) prod = multiply(prod, factors[i]);
    Int discs = 1, ress = 1;
    for (const BinaryForm& fi : factors) discs *= discriminant(fi);
    for (size_t i = 0; i < factors.size(); ++i)
        for (size_t j = i + 1; j < factors.size(); ++j) {
            Int rij = resultant(factors[i], factors[j]);
            ress *= rij * rij;
        }
    return {discriminant(prod), discs, ress};
}

// -------------------------------------------------------- exact determinants

Int det_bareiss(std::vector<std::vector<Int>> m) {
    size_t n = m.size();
    if (n == 0) return Int(1);
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return Int(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Rat det_rational(std::vector<std::vector<Rat>> m) {
    size_t n = m.size();
    Rat det = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != k) { std::swap(m[piv], m[k]); det = -det; }
        det *= m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rat factor = m[i][k] / m[k][k];
            for (size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
        }
    }
    return det;
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int_strict(s));
    Int num = parse_int_strict(s.substr(0, slash));
    Int den = parse_int_strict(s.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator: " + s);
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace bfc
