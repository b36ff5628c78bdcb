#include "bfc/sunit.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace bfc {

namespace {

// exponent map of q over the spec primes; empty optional when some other
// prime divides the numerator or denominator
std::optional<std::map<long, long>> support(const Rat& q, const std::vector<long>& primes) {
    std::map<long, long> exps;
    Int num = q.get_num(), den = q.get_den();
    if (num < 0) num = -num;
    for (long p : primes) {
        long e = 0;
        while (num % p == 0) { num /= p; ++e; }
        while (den % p == 0) { den /= p; --e; }
        if (e != 0) exps[p] = e;
    }
    if (num != 1 || den != 1) return std::nullopt;
    return exps;
}

} // namespace

std::vector<SUnitSolution> sunit_solutions(const SUnitGroupSpec& spec) {
    for (size_t i = 0; i < spec.primes.size(); ++i) {
        if (spec.primes[i] < 2) throw degenerate_error("spec primes must be >= 2");
        for (size_t j = i + 1; j < spec.primes.size(); ++j)
            if (spec.primes[i] == spec.primes[j])
                throw degenerate_error("spec primes must be distinct");
    }
    long bound = spec.exponent_bound;
    std::vector<SUnitSolution> out;
    std::vector<long> e(spec.primes.size(), -bound);
    for (;;) {
        Rat mag = 1;
        for (size_t i = 0; i < e.size(); ++i) {
            Int pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(spec.primes[i]),
                          static_cast<unsigned long>(e[i] < 0 ? -e[i] : e[i]));
            if (e[i] >= 0) mag *= Rat(pw);
            else mag /= Rat(pw);
        }
        for (int sign = 0; sign < 2; ++sign) {
            Rat x = sign ? Rat(-mag) : mag;
            Rat y = 1 - x;
            if (y == 0) continue;
            auto ey = support(y, spec.primes);
            if (!ey) continue;
            SUnitSolution s;
            s.x = x;
            s.y = y;
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) s.ex[spec.primes[i]] = e[i];
            s.ey = *ey;
            out.push_back(std::move(s));
        }
        size_t pos = 0;
        while (pos < e.size()) {
            if (++e[pos] <= bound) break;
            e[pos] = -bound;
            ++pos;
        }
        if (pos == e.size()) break;
        if (e.empty()) break;
    }
    std::sort(out.begin(), out.end(),
              [](const SUnitSolution& a, const SUnitSolution& b) { return a.x < b.x; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const SUnitSolution& a, const SUnitSolution& b) { return a.x == b.x; }),
              out.end());
    return out;
}

BSBoundReport verify_bs_bound(const SUnitGroupSpec& spec,
                              const std::vector<SUnitSolution>& solutions) {
    BSBoundReport rep;
    rep.count = solutions.size();
    rep.bound = 1;
    unsigned long n = static_cast<unsigned long>(spec.rank());
    mpz_mul_2exp(rep.bound.get_mpz_t(), rep.bound.get_mpz_t(), 8 * (n + 1));
    rep.holds = Int(static_cast<unsigned long>(rep.count)) <= rep.bound;
    return rep;
}

namespace {

std::string exps_json(const std::map<long, long>& m) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [p, e] : m) {
        if (!first) os << ',';
        first = false;
        os << '"' << p << "\":" << e;
    }
    os << '}';
    return os.str();
}

} // namespace

std::string SUnitSolution::to_json() const {
    std::ostringstream os;
    os << "{\"x\":\"" << rat_to_string(x) << "\",\"y\":\"" << rat_to_string(y)
       << "\",\"ex\":" << exps_json(ex) << ",\"ey\":" << exps_json(ey) << "}";
    return os.str();
}

std::string solutions_to_json(const std::vector<SUnitSolution>& solutions) {
    std::string s = "[";
    for (size_t i = 0; i < solutions.size(); ++i) {
        if (i) s += ',';
        s += solutions[i].to_json();
    }
    s += ']';
    return s;
}

std::string BSBoundReport::to_json() const {
    std::ostringstream os;
    os << "{\"count\":" << count << ",\"bound\":\"" << bound.get_str()
       << "\",\"holds\":" << (holds ? "true" : "false") << "}";
    return os.str();
}

} // namespace bfc
