#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bfc/census.hpp"
#include "bfc/equivalence.hpp"
#include "bfc/order.hpp"
#include "bfc/sunit.hpp"

namespace {

constexpr int kSchemaVersion = 1;

void emit(const std::string& body_fields) {
    std::cout << "{\"schema_version\":" << kSchemaVersion << "," << body_fields << "}\n";
}

std::vector<unsigned> ladder_for(unsigned max_precision) {
    std::vector<unsigned> ladder;
    for (unsigned p : bfc::default_precision_ladder())
        if (p <= max_precision) ladder.push_back(p);
    if (ladder.empty() || ladder.back() != max_precision) ladder.push_back(max_precision);
    return ladder;
}

// betas range "LO..HI"
std::pair<long, long> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos)
        throw bfc::parse_error("expected a range LO..HI, got '" + s + "'");
    try {
        long lo = std::stol(s.substr(0, dots));
        long hi = std::stol(s.substr(dots + 2));
        if (hi < lo) throw bfc::parse_error("empty range '" + s + "'");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw bfc::parse_error("expected a range LO..HI, got '" + s + "'");
    } catch (const std::out_of_range&) {
        throw bfc::parse_error("range endpoint out of range in '" + s + "'");
    }
}

std::vector<long> parse_primes(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stol(tok));
        } catch (const std::exception&) {
            throw bfc::parse_error("bad prime list entry '" + tok + "'");
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for integer binary forms: discriminants, GL2(Z) "
                 "equivalence, invariant orders, censuses, and unit equations.\n"
                 "Forms are encoded as r:a0,a1,...,ar; matrices as a,b;c,d."};
    app.require_subcommand(1);
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker count (census/classify internals)")->capture_default_str();

    std::string form_a, form_b, matrix_enc, out_path, cache_path, betas_range, primes_csv;
    unsigned precision = 4096;
    int degree = 3;
    long height = 1, family_a = 2, sunit_bound = 5;
    std::string c_value = "1";
    bool flag_irreducible = false, flag_primitive = false;

    auto* cmd_disc = app.add_subcommand("disc", "discriminant of a form");
    cmd_disc->add_option("form", form_a, "form encoding")->required();

    auto* cmd_res = app.add_subcommand("resultant", "resultant of two forms at their declared degrees");
    cmd_res->add_option("form1", form_a)->required();
    cmd_res->add_option("form2", form_b)->required();

    auto* cmd_act = app.add_subcommand("act", "apply an integer matrix: F_U(X,Y) = F(aX+bY, cX+dY)");
    cmd_act->add_option("form", form_a)->required();
    cmd_act->add_option("matrix", matrix_enc)->required();

    auto* cmd_equiv = app.add_subcommand("equiv", "decide GL2(Z) equivalence with certificate");
    cmd_equiv->add_option("form1", form_a)->required();
    cmd_equiv->add_option("form2", form_b)->required();
    cmd_equiv->add_option("--precision", precision, "largest root precision in bits")->capture_default_str();

    auto* cmd_order = app.add_subcommand("order", "invariant order of an irreducible form");
    cmd_order->add_option("form", form_a)->required();

    auto* cmd_ordeq = app.add_subcommand("order-eq", "lattice equality of two invariant orders");
    cmd_ordeq->add_option("form1", form_a)->required();
    cmd_ordeq->add_option("form2", form_b)->required();

    auto* cmd_census = app.add_subcommand("census", "group a coefficient box by discriminant and classify");
    cmd_census->add_option("--degree", degree)->required();
    cmd_census->add_option("--height", height)->required();
    cmd_census->add_flag("--irreducible", flag_irreducible);
    cmd_census->add_flag("--primitive", flag_primitive);
    cmd_census->add_option("--out", out_path, "also write CSV rows to this file");
    cmd_census->add_option("--cache", cache_path, "append-only JSONL cache");

    auto* cmd_family = app.add_subcommand("family", "F(X+bY, aY) family with inequivalence report");
    cmd_family->add_option("--form", form_a)->required();
    cmd_family->add_option("--a", family_a)->required();
    cmd_family->add_option("--betas", betas_range, "range LO..HI")->required();

    auto* cmd_runit = app.add_subcommand("runit", "forms with unit resultant against a fixed form");
    cmd_runit->add_option("--form", form_a)->required();
    cmd_runit->add_option("--deg", degree)->required();
    cmd_runit->add_option("--height", height)->required();

    auto* cmd_sunit = app.add_subcommand("sunit", "solutions of x + y = 1 supported on given primes");
    cmd_sunit->add_option("--primes", primes_csv, "comma-separated, may be empty")->default_val("");
    cmd_sunit->add_option("--bound", sunit_bound)->required();

    auto* cmd_bound = app.add_subcommand("bound", "explicit class-count bounds");
    cmd_bound->add_option("--degree", degree)->required();
    cmd_bound->add_option("--c", c_value)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;   // usage errors; --help exits 0
    }

    try {
        if (*cmd_disc) {
            bfc::BinaryForm f = bfc::BinaryForm::parse(form_a);
            emit("\"disc\":\"" + bfc::discriminant(f).get_str() + "\"");
        } else if (*cmd_res) {
            bfc::BinaryForm f = bfc::BinaryForm::parse(form_a);
            bfc::BinaryForm g = bfc::BinaryForm::parse(form_b);
            emit("\"resultant\":\"" + bfc::resultant(f, g).get_str() + "\"");
        } else if (*cmd_act) {
            bfc::BinaryForm f = bfc::BinaryForm::parse(form_a);
            bfc::IntMatrix2 u = bfc::IntMatrix2::parse(matrix_enc);
            emit("\"form\":\"" + bfc::transform(f, u).encode() + "\"");
        } else if (*cmd_equiv) {
            bfc::BinaryForm f = bfc::BinaryForm::parse(form_a);
            bfc::BinaryForm g = bfc::BinaryForm::parse(form_b);
            bfc::EquivalenceVerdict v = bfc::find_equivalence(f, g, ladder_for(precision));
            std::string body = v.to_json();
            emit("\"verdict\":" + body);
        } else if (*cmd_order) {
            bfc::BinaryForm f = bfc::BinaryForm::parse(form_a);
            bfc::OrderPresentation o = bfc::invariant_order(f);
            emit("\"order\":" + o.to_json() +
                 ",\"order_disc\":\"" + bfc::order_discriminant(o).get_str() + "\"");
        } else if (*cmd_ordeq) {
            bfc::BinaryForm f = bfc::BinaryForm::parse(form_a);
            bfc::BinaryForm g = bfc::BinaryForm::parse(form_b);
            bfc::OrderPresentation of = bfc::invariant_order(f);
            bfc::OrderPresentation og = bfc::invariant_order(g);
            bool equal;
            std::string identification;
            if (of.minimal_poly == og.minimal_poly) {
                equal = bfc::order_equal(of, og);
                identification = "shared-minimal-polynomial";
            } else {
                bfc::EquivalenceVerdict v = bfc::find_equivalence(f, g);
                if (v.status != bfc::VerdictStatus::Equivalent)
                    throw bfc::field_mismatch_error();
                // G = F_U identifies the fields: rebase G's order over F
                std::vector<bfc::Rat> img = bfc::theta_image(*v.certificate, of.minimal_poly);
                equal = bfc::order_equal(of, bfc::rebase(og, of.minimal_poly, img));
                identification = "equivalence-certificate";
            }
            emit(std::string("\"equal\":") + (equal ? "true" : "false") +
                 ",\"identification\":\"" + identification + "\"");
        } else if (*cmd_census) {
            bfc::CensusFlags fl;
            fl.irreducible = flag_irreducible;
            fl.primitive = flag_primitive;
            bfc::CensusReport rep = bfc::census_by_discriminant(
                degree, height, fl, bfc::default_precision_ladder(), cache_path);
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                if (!out) throw bfc::domain_error("cannot open output file " + out_path);
                out << rep.to_csv();
            }
            std::cout << rep.to_json() << "\n";   // report carries its own schema_version
        } else if (*cmd_family) {
            bfc::BinaryForm f = bfc::BinaryForm::parse(form_a);
            auto [lo, hi] = parse_range(betas_range);
            bfc::FamilyReport rep = bfc::family_inequivalence_check(f, family_a, lo, hi);
            emit("\"family\":" + rep.to_json());
        } else if (*cmd_runit) {
            bfc::BinaryForm f0 = bfc::BinaryForm::parse(form_a);
            auto sols = bfc::resultant_unit_search(f0, degree, height);
            std::string body = "\"solutions\":[";
            for (size_t i = 0; i < sols.size(); ++i)
                body += (i ? ",\"" : "\"") + sols[i].encode() + "\"";
            body += "]";
            emit(body);
        } else if (*cmd_sunit) {
            bfc::SUnitGroupSpec spec;
            if (!primes_csv.empty()) spec.primes = parse_primes(primes_csv);
            spec.exponent_bound = sunit_bound;
            auto sols = bfc::sunit_solutions(spec);
            emit("\"solutions\":" + bfc::solutions_to_json(sols) +
                 ",\"bs_bound\":" + bfc::verify_bs_bound(spec, sols).to_json());
        } else if (*cmd_bound) {
            bfc::Int c(c_value);
            bfc::BoundValue b = bfc::bound_evaluator(degree, c);
            emit("\"order_bound\":\"" + b.order_bound.get_str() +
                 "\",\"class_bound\":\"" + b.class_bound.get_str() + "\"");
        }
    } catch (const bfc::parse_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const bfc::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
