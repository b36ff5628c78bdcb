#include "bfc/census.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace bfc {

namespace {

constexpr int kCacheVersion = 1;

struct IntLess {
    bool operator()(const Int& a, const Int& b) const { return cmp(a, b) < 0; }
};

} // namespace

std::string CensusFlags::encode() const {
    std::string s;
    auto add = [&](const char* name) {
        if (!s.empty()) s += '+';
        s += name;
    };
    if (primitive) add("primitive");
    if (squarefree) add("squarefree");
    if (irreducible) add("irreducible");
    return s.empty() ? "none" : s;
}

std::vector<BinaryForm> enumerate_forms(int r, long height, const CensusFlags& flags) {
    std::vector<BinaryForm> out;
    std::vector<long> a(static_cast<size_t>(r) + 1);
    a[0] = 1;
    for (size_t i = 1; i < a.size(); ++i) a[i] = -height;
    for (;;) {
        std::vector<Int> cs(a.begin(), a.end());
        BinaryForm f(cs);
        bool keep = true;
        if (flags.primitive && content(f) != 1) keep = false;
        if (keep && flags.squarefree && discriminant(f) == 0) keep = false;
        if (keep && flags.irreducible && !irreducible(f)) keep = false;
        if (keep) out.push_back(std::move(f));
        // odometer, last coefficient fastest
        size_t pos = a.size();
        while (pos-- > 0) {
            if (++a[pos] <= height) break;
            a[pos] = (pos == 0) ? 1 : -height;
            if (pos == 0) return out;
        }
        if (pos == static_cast<size_t>(-1)) return out;
        if (pos == 0 && a[0] > height) return out;
    }
}

namespace {

struct CacheEntry {
    std::string disc;
    std::string class_rep;
};

std::map<std::string, CacheEntry> load_cache(const std::string& path, const CensusFlags& flags) {
    std::map<std::string, CacheEntry> cache;
    std::ifstream in(path);
    if (!in) return cache;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) continue;
        if (!j.contains("form") || !j.contains("disc") || !j.contains("class_rep")) continue;
        if (j.value("version", 0) != kCacheVersion) continue;
        if (j.value("flags", std::string()) != flags.encode()) continue;
        cache[j["form"].get<std::string>()] =
            {j["disc"].get<std::string>(), j["class_rep"].get<std::string>()};
    }
    return cache;
}

void append_cache(const std::string& path, const CensusFlags& flags,
                  const std::vector<std::pair<std::string, CacheEntry>>& records) {
    if (path.empty() || records.empty()) return;
    std::ofstream out(path, std::ios::app);
    for (const auto& [form, e] : records)
        out << "{\"form\":\"" << form << "\",\"disc\":\"" << e.disc
            << "\",\"class_rep\":\"" << e.class_rep << "\",\"flags\":\"" << flags.encode()
            << "\",\"version\":" << kCacheVersion << "}\n";
}

} // namespace

CensusReport census_by_discriminant(int r, long height, const CensusFlags& flags,
                                    const std::vector<unsigned>& ladder,
                                    const std::string& cache_path) {
    CensusReport report;
    report.degree = r;
    report.height = height;
    report.flags = flags;
    if (height < 1) return report;

    std::map<Int, std::vector<BinaryForm>, IntLess> groups;
    for (BinaryForm& f : enumerate_forms(r, height, flags)) {
        Int d = discriminant(f);
        if (d == 0) continue;  // classes are defined for squarefree forms only
        groups[d].push_back(std::move(f));
    }

    std::map<std::string, CacheEntry> cache;
    if (!cache_path.empty()) cache = load_cache(cache_path, flags);
    std::vector<std::pair<std::string, CacheEntry>> new_records;

    for (auto& [disc, members] : groups) {
        CensusRow row;
        row.disc = disc;
        row.form_count = members.size();
        std::set<std::string> encodings;
        for (const auto& f : members) encodings.insert(f.encode());

        bool covered = !cache.empty();
        std::set<std::string> reps;
        for (const auto& f : members) {
            auto it = cache.find(f.encode());
            if (it == cache.end() || it->second.disc != disc.get_str() ||
                !encodings.count(it->second.class_rep)) {
                covered = false;
                break;
            }
            reps.insert(it->second.class_rep);
        }
        if (covered) {
            report.cache_hits += members.size();
            row.class_count = reps.size();
            row.representatives.assign(reps.begin(), reps.end());
        } else if (r >= 3) {
            auto classes = classify(members, ladder);
            row.class_count = classes.size();
            std::map<std::string, std::string> rep_of;  // form -> class rep
            for (const auto& cls : classes) {
                std::string rep = members[cls[0]].encode();
                for (size_t idx : cls) rep = std::min(rep, members[idx].encode());
                for (size_t idx : cls) rep_of[members[idx].encode()] = rep;
                row.representatives.push_back(rep);
            }
            std::sort(row.representatives.begin(), row.representatives.end());
            for (const auto& f : members)
                new_records.emplace_back(f.encode(),
                                         CacheEntry{disc.get_str(), rep_of[f.encode()]});
        } else {
            // degree 2: grouping only, no class decision
            row.class_count = 0;
            row.representatives.assign(encodings.begin(), encodings.end());
        }
        report.rows.push_back(std::move(row));
    }
    append_cache(cache_path, flags, new_records);
    return report;
}

std::string CensusReport::to_json() const {
    std::ostringstream os;
    os << "{\"schema_version\":1,\"degree\":" << degree << ",\"height\":" << height
       << ",\"flags\":\"" << flags.encode() << "\",\"cache_hits\":" << cache_hits
       << ",\"rows\":[";
    for (size_t i = 0; i < rows.size(); ++i) {
        const CensusRow& r = rows[i];
        os << (i ? "," : "") << "{\"disc\":\"" << r.disc.get_str()
           << "\",\"form_count\":" << r.form_count
           << ",\"class_count\":" << r.class_count << ",\"representatives\":[";
        for (size_t j = 0; j < r.representatives.size(); ++j)
            os << (j ? "," : "") << '"' << r.representatives[j] << '"';
        os << "]}";
    }
    os << "]}";
    return os.str();
}

std::string CensusReport::to_csv() const {
    std::ostringstream os;
    os << "disc,form_count,class_count,representatives\n";
    for (const CensusRow& r : rows) {
        os << r.disc.get_str() << ',' << r.form_count << ',' << r.class_count << ',';
        for (size_t j = 0; j < r.representatives.size(); ++j)
            os << (j ? "|" : "") << r.representatives[j];
        os << '\n';
    }
    return os.str();
}

std::vector<BinaryForm> translation_family(const BinaryForm& f, long a, long beta_lo, long beta_hi) {
    if (a == 0) throw singular_matrix_error();
    std::vector<BinaryForm> out;
    for (long beta = beta_lo; beta <= beta_hi; ++beta)
        out.push_back(transform(f, IntMatrix2{Int(1), Int(beta), Int(0), Int(a)}));
    return out;
}

FamilyReport family_inequivalence_check(const BinaryForm& f, long a, long beta_lo, long beta_hi,
                                        const std::vector<unsigned>& ladder) {
    FamilyReport rep;
    rep.members = translation_family(f, a, beta_lo, beta_hi);
    rep.classes = classify(rep.members, ladder);
    std::vector<size_t> class_of(rep.members.size());
    for (size_t c = 0; c < rep.classes.size(); ++c)
        for (size_t idx : rep.classes[c]) class_of[idx] = c;
    // augmented equivalence: the only map carrying the distinguished root
    // data is (1, (beta1-beta2)/a; 0, 1) up to sign, so the exact
    // certificate of (in)equivalence is the divisibility a | beta1-beta2
    long am = a < 0 ? -a : a;
    std::map<long, std::vector<size_t>> residues;
    for (size_t i = 0; i < rep.members.size(); ++i) {
        long beta = beta_lo + static_cast<long>(i);
        long res = ((beta % am) + am) % am;
        residues[res].push_back(i);
    }
    for (auto& [res, idxs] : residues) rep.augmented_classes.push_back(idxs);
    for (size_t i = 0; i < rep.members.size(); ++i)
        for (size_t j = i + 1; j < rep.members.size(); ++j) {
            long bi = beta_lo + static_cast<long>(i), bj = beta_lo + static_cast<long>(j);
            if ((bi - bj) % a != 0 && class_of[i] == class_of[j])
                rep.collapsed_pairs.emplace_back(bi, bj);
        }
    return rep;
}

std::string FamilyReport::to_json() const {
    std::ostringstream os;
    os << "{\"members\":[";
    for (size_t i = 0; i < members.size(); ++i)
        os << (i ? "," : "") << '"' << members[i].encode() << '"';
    auto dump_classes = [&os](const std::vector<std::vector<size_t>>& cls) {
        for (size_t c = 0; c < cls.size(); ++c) {
            os << (c ? ",[" : "[");
            for (size_t j = 0; j < cls[c].size(); ++j)
                os << (j ? "," : "") << cls[c][j];
            os << "]";
        }
    };
    os << "],\"classes\":[";
    dump_classes(classes);
    os << "],\"augmented_classes\":[";
    dump_classes(augmented_classes);
    os << "],\"collapsed_pairs\":[";
    for (size_t i = 0; i < collapsed_pairs.size(); ++i)
        os << (i ? ",[" : "[") << collapsed_pairs[i].first << ","
           << collapsed_pairs[i].second << "]";
    os << "]}";
    return os.str();
}

std::vector<BinaryForm> resultant_unit_search(const BinaryForm& f0, int s, long height) {
    if (f0.degree() < 3) throw degree_too_small_error("unit-resultant search needs deg F0 >= 3");
    if (discriminant(f0) == 0) throw not_squarefree_error();
    std::set<std::string> seen;
    std::vector<BinaryForm> out;
    std::vector<long> b(static_cast<size_t>(s) + 1, -height);
    for (;;) {
        bool any = false;
        for (long v : b)
            if (v != 0) any = true;
        if (any) {
            std::vector<Int> cs(b.begin(), b.end());
            // sign normalization: first nonzero coefficient positive
            for (auto& c : cs)
                if (c != 0) {
                    if (c < 0)
                        for (auto& t : cs) t = -t;
                    break;
                }
            BinaryForm g(cs);
            Int rres = resultant(f0, g);
            if ((rres == 1 || rres == -1) && seen.insert(g.encode()).second)
                out.push_back(std::move(g));
        }
        size_t pos = b.size();
        bool done = true;
        while (pos-- > 0) {
            if (++b[pos] <= height) { done = false; break; }
            b[pos] = -height;
        }
        if (done) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<std::pair<Int, unsigned long>> factorize(Int c) {
    std::vector<std::pair<Int, unsigned long>> out;
    for (Int p = 2; p * p <= c; ++p) {
        if (c % p == 0) {
            unsigned long e = 0;
            while (c % p == 0) { c /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (c > 1) out.emplace_back(c, 1);
    return out;
}

} // namespace

int omega(const Int& c) {
    if (c < 1) throw degenerate_error("omega needs a positive argument");
    return static_cast<int>(factorize(c).size());
}

Int tau_alpha(const Int& c, int alpha) {
    if (c < 1 || alpha < 1) throw degenerate_error("tau_alpha needs positive arguments");
    Int t = 1;
    for (const auto& [p, e] : factorize(c)) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), e + static_cast<unsigned long>(alpha),
                     static_cast<unsigned long>(alpha));
        t *= binom;
    }
    return t;
}

Int divisor_power_sum(const Int& c, int k) {
    if (c < 1 || k < 1) throw degenerate_error("divisor_power_sum needs positive arguments");
    Int total = 1;
    for (const auto& [p, e] : factorize(c)) {
        unsigned long cap = e / static_cast<unsigned long>(k);
        Int geo = 0, pw = 1;
        for (unsigned long t = 0; t <= cap; ++t) { geo += pw; pw *= p; }
        total *= geo;
    }
    return total;
}

BoundValue bound_evaluator(int r, const Int& c) {
    if (r < 3 || c < 1) throw degenerate_error("bound_evaluator needs r >= 3, c >= 1");
    unsigned long r3 = static_cast<unsigned long>(r) * static_cast<unsigned long>(r) *
                       static_cast<unsigned long>(r);
    int alpha = r * (r - 1) / 2;
    BoundValue b;
    b.order_bound = 1;
    mpz_mul_2exp(b.order_bound.get_mpz_t(), b.order_bound.get_mpz_t(), 24 * r3);
    Int pw = 1;
    mpz_mul_2exp(pw.get_mpz_t(), pw.get_mpz_t(),
                 24 * r3 * (1 + static_cast<unsigned long>(omega(c))));
    b.class_bound = pw * tau_alpha(c * c, alpha) * divisor_power_sum(c, alpha);
    return b;
}

} // namespace bfc
