#include <CLI11.hpp>

#include <iostream>

#include "quadmin/error.hpp"
#include "quadmin/scan.hpp"
#include "quadmin/structure.hpp"
#include "quadmin/verify.hpp"

using namespace quadmin;

namespace {

void print_measure(const MeasureResult& mr, int digits) {
    std::cout << "value      " << qv_to_string(mr.value) << "\n";
    std::cout << "decimal    " << qv_to_decimal(mr.value, digits) << "\n";
    std::cout << "element    (" << mr.witness.a << " + " << mr.witness.b << "*sqrt("
              << mr.witness.field.d() << "))/" << mr.witness.c << "\n";
    std::cout << "lead k     " << mr.k << "\n";
    std::cout << "min poly   " << i128_str(mr.poly.A) << " x^2 " << (mr.poly.B < 0 ? "- " : "+ ")
              << i128_str(i128_abs(mr.poly.B)) << " x " << (mr.poly.C < 0 ? "- " : "+ ")
              << i128_str(i128_abs(mr.poly.C)) << "\n";
}

QuadValue ratio_qv(const QuadValue& L) {
    SquarefreeD f = L.field;
    return qv_normalize(L.q * i128(f.d()), L.p, L.den * f.sqrt_disc_coeff() * i128(f.d()), f);
}

// "0.9" -> 9/10; integer and fractional digits only
bool parse_threshold(const std::string& s, uint64_t& num, uint64_t& den) {
    num = 0;
    den = 1;
    bool seen_digit = false, seen_dot = false;
    for (char ch : s) {
        if (ch == '.') {
            if (seen_dot) return false;
            seen_dot = true;
            continue;
        }
        if (ch < '0' || ch > '9') return false;
        if (num > (UINT64_MAX - 9) / 10 || (seen_dot && den > UINT64_MAX / 10)) return false;
        num = num * 10 + uint64_t(ch - '0');
        if (seen_dot) den *= 10;
        seen_digit = true;
    }
    return seen_digit && num > 0;
}

int cmd_lmin(uint64_t d, bool oracle, int digits) {
    SquarefreeD field(d);
    LminResult lr = lmin(field);
    std::cout << "d          " << d << "  (d mod 4 = " << field.mod4() << ", disc = "
              << field.disc() << ")\n";
    std::cout << "L(d)       " << qv_to_string(lr.value) << "\n";
    std::cout << "decimal    " << qv_to_decimal(lr.value, digits) << "\n";
    std::cout << "ratio      " << qv_to_decimal(ratio_qv(lr.value), digits)
              << "  (L/sqrt(disc))\n";
    std::cout << "witness    a=" << lr.witness.a << " c=" << lr.witness.c << "\n";
    std::cout << "lead k     " << lr.measure.k << "\n";
    std::cout << "exceptional " << (is_exceptional(field) ? "yes" : "no") << "\n";
    if (oracle) {
        QuadValue brute = lmin_bruteforce(field);
        if (!qv_eq(lr.value, brute)) {
            std::cerr << "oracle mismatch: exhaustive search gives " << qv_to_string(brute)
                      << "\n";
            return 2;
        }
        std::cout << "oracle     exhaustive search agrees\n";
    }
    return 0;
}

int cmd_bounds(uint64_t d) {
    SquarefreeD field(d);
    LminResult lr = lmin(field);
    QuadValue sqrt_disc = qv_normalize(0, field.sqrt_disc_coeff(), 1, field);
    QuadValue twice = qv_normalize(2 * lr.value.p, 2 * lr.value.q, lr.value.den, field);
    std::cout << "d          " << d << "  (d mod 4 = " << field.mod4() << ", disc = "
              << field.disc() << ")\n";
    std::cout << "L(d)       " << qv_to_string(lr.value) << " = "
              << qv_to_decimal(lr.value, 12) << "\n";
    std::cout << "ratio      " << qv_to_decimal(ratio_qv(lr.value), 12) << "\n";
    bool sandwich = qv_cmp(lr.value, sqrt_disc) < 0 && qv_cmp(twice, sqrt_disc) > 0;
    std::cout << "sandwich   sqrt(disc)/2 < L < sqrt(disc): " << (sandwich ? "ok" : "VIOLATED")
              << "\n";
    if (!sandwich) return 2;

    if (is_exceptional(field)) {
        ExceptionalForm ef = decompose_exceptional(field);
        std::cout << "exceptional yes: d = ";
        if (ef.four_variant)
            std::cout << "((2*" << ef.k << "-1)*" << ef.A << ")^2 " << (ef.sign > 0 ? "+" : "-")
                      << " 4*" << ef.A << "\n";
        else
            std::cout << "(" << ef.k << "*" << ef.A << ")^2 " << (ef.sign > 0 ? "+" : "-")
                      << " 2*" << ef.A << "\n";
        LminResult cf = nonresidue_lmin(field);
        std::cout << "closed form " << qv_to_string(cf.value)
                  << (qv_eq(cf.value, lr.value) ? " (agrees)" : " (MISMATCH)") << "\n";
        if (!qv_eq(cf.value, lr.value)) return 2;
    } else {
        std::cout << "exceptional no\n";
    }
    SplitPrime sp = first_split_prime(field);
    std::cout << "split prime " << sp.p << (sp.below_half_sqrt_disc ? " (below sqrt(disc)/2)"
                                                                    : " (not below sqrt(disc)/2)")
              << "\n";
    auto q = suggest_modulus(field);
    if (!q) {
        std::cout << "certificate none: every admissible modulus has lambda >= 1\n";
        return 0;
    }
    BoundCertificate cert = residue_upper_bound(field, *q);
    std::cout << "certificate q=" << cert.q << " r0=" << cert.r0 << " r=" << cert.r << "\n";
    std::cout << "lambda     " << qv_to_decimal(cert.lambda, 12) << "\n";
    char bnd[32];
    std::snprintf(bnd, sizeof bnd, "%.12f", cert.bound.get_d());
    std::cout << "bound      " << bnd << " (ratio bound from lambda)\n";
    std::cout << "alpha1     " << qv_to_string(cert.alpha1.value) << "\n";
    std::cout << "alpha2     " << qv_to_string(cert.alpha2.value) << "\n";
    std::cout << "achieved   " << qv_to_string(cert.achieved) << " >= L(d): ok\n";
    return 0;
}

int cmd_verify(const std::string& suite) {
    std::vector<Check> checks;
    if (suite == "appendix")
        checks = verify_appendix();
    else if (suite == "theorem1")
        checks = verify_theorem1();
    else if (suite == "oracle")
        checks = verify_oracle();
    else if (suite == "nonresidue")
        checks = verify_nonresidue();
    else if (suite == "bounds")
        checks = verify_bounds();
    size_t failed = 0;
    for (const auto& c : checks) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.pass && !c.detail.empty()) std::cout << "  [" << c.detail << "]";
        std::cout << "\n";
        if (!c.pass) ++failed;
    }
    std::cout << checks.size() - failed << "/" << checks.size() << " checks passed\n";
    return failed == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact minimal Mahler measures over real quadratic fields"};
    app.require_subcommand(1);

    int64_t ma = 0, mb = 0, mc = 0;
    uint64_t md = 0;
    int digits = 12;
    auto* m = app.add_subcommand("measure", "Mahler measure of (a + b sqrt(d))/c");
    m->add_option("a", ma, "numerator integer part")->required();
    m->add_option("b", mb, "numerator sqrt coefficient")->required();
    m->add_option("c", mc, "denominator")->required();
    m->add_option("d", md, "square-free field discriminant part")->required();
    m->add_option("--digits", digits, "decimal digits to print")->check(CLI::Range(1, 50));

    uint64_t ld = 0;
    bool l_oracle = false;
    auto* lm = app.add_subcommand("lmin", "minimal Mahler measure L(d) of Q(sqrt d)");
    lm->add_option("d", ld, "square-free d >= 2")->required();
    lm->add_flag("--oracle", l_oracle, "cross-check with the exhaustive search (d <= 500)");
    lm->add_option("--digits", digits, "decimal digits to print")->check(CLI::Range(1, 50));

    uint64_t s_from = 2, s_to = 2;
    int s_workers = 0;
    int64_t s_class = -1;
    std::string s_out, s_ckpt;
    auto* sc = app.add_subcommand("scan", "scan a range of d, emitting one CSV row per field");
    sc->add_option("--from", s_from, "first d")->required();
    sc->add_option("--to", s_to, "last d")->required();
    sc->add_option("--class", s_class, "keep only d with this residue mod 4")
        ->check(CLI::Range(1, 3));
    sc->add_option("--workers", s_workers, "OpenMP worker count (default: all cores)");
    sc->add_option("--out", s_out, "CSV output path (default: stdout)");
    auto* ckpt_opt =
        sc->add_option("--checkpoint", s_ckpt, "checkpoint file for resumable scans");
    ckpt_opt->needs(sc->get_option("--out"));

    uint64_t c_from = 2, c_to = 2;
    int c_workers = 0;
    std::string c_thr;
    auto* ce = app.add_subcommand("census", "list d whose ratio L/sqrt(disc) exceeds a threshold");
    ce->add_option("--from", c_from)->required();
    ce->add_option("--to", c_to)->required();
    ce->add_option("--threshold", c_thr, "decimal threshold, e.g. 0.9")->required();
    ce->add_option("--workers", c_workers);

    uint64_t p_from = 2, p_to = 2;
    int p_workers = 0;
    bool p_even = false;
    auto* pr = app.add_subcommand("pairs", "report d without a close divisor pair");
    pr->add_option("--from", p_from)->required();
    pr->add_option("--to", p_to)->required();
    pr->add_flag("--even", p_even, "even-denominator variant (d = 1 mod 4 only)");
    pr->add_option("--workers", p_workers);

    uint64_t b_d = 0;
    auto* bo = app.add_subcommand("bounds", "bound chain and residue certificate for one d");
    bo->add_option("d", b_d, "square-free d >= 2")->required();

    std::string v_suite;
    auto* ve = app.add_subcommand("verify", "run a verification suite");
    ve->add_option("--suite", v_suite, "appendix | theorem1 | oracle | nonresidue | bounds")
        ->required()
        ->check(CLI::IsMember({"appendix", "theorem1", "oracle", "nonresidue", "bounds"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1; // exit 0 is --help; every parse failure is a usage error
    }

    try {
        if (m->parsed()) {
            SquarefreeD field(md);
            print_measure(measure(ma, mb, mc, field), digits);
            return 0;
        }
        if (lm->parsed()) return cmd_lmin(ld, l_oracle, digits);
        if (sc->parsed()) {
            ScanOptions opt;
            opt.from = s_from;
            opt.to = s_to;
            opt.workers = s_workers;
            if (s_class >= 0) opt.filter = {4u, uint64_t(s_class)};
            ScanIo io{s_out, s_ckpt};
            scan_range(opt, io);
            return 0;
        }
        if (ce->parsed()) {
            uint64_t num, den;
            if (!parse_threshold(c_thr, num, den)) {
                std::cerr << "invalid threshold: " << c_thr << "\n";
                return 1;
            }
            auto hits = census_ratio(c_from, c_to, num, den, c_workers);
            for (uint64_t d : hits) std::cout << d << "\n";
            std::cout << "# " << hits.size() << " of them in [" << c_from << ", " << c_to
                      << "] with ratio > " << c_thr << "\n";
            return 0;
        }
        if (pr->parsed()) {
            auto fails = pair_failures(p_from, p_to, p_even, p_workers);
            for (uint64_t d : fails) std::cout << d << "\n";
            std::cout << "# " << fails.size() << (p_even ? " (even variant)" : "")
                      << " without a pair in [" << p_from << ", " << p_to << "]\n";
            return 0;
        }
        if (bo->parsed()) return cmd_bounds(b_d);
        if (ve->parsed()) return cmd_verify(v_suite);
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
