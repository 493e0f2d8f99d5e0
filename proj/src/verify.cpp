#include "quadmin/verify.hpp"

#include <cmath>
#include <cstdio>

#include "quadmin/error.hpp"
#include "quadmin/scan.hpp"
#include "quadmin/structure.hpp"

namespace quadmin {

bool all_pass(const std::vector<Check>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

const std::vector<ReferenceRow>& reference_rows() {
    static const std::vector<ReferenceRow> rows = {
        {3, 1, 1, 1, 1, 1, 0.788675},      {14, 2, 1, 1, 2, 2, 0.767261},
        {22, 2, 1, 1, 2, 3, 0.713200},     {23, 3, 1, 1, 3, 2, 0.812771},
        {29, 5, 0, 1, 3, 2, 0.928476},     {38, 11, 0, 1, 4, 2, 0.892217},
        {47, 5, 1, 1, 5, 2, 0.864662},     {53, 7, 0, 1, 5, 2, 0.961523},
        {62, 6, 1, 1, 6, 2, 0.881000},     {77, 7, 1, 2, 7, 2, 0.898862},
        {83, 17, 0, 1, 7, 2, 0.932996},    {138, 6, 1, 1, 6, 6, 0.755376},
        {167, 11, 1, 1, 11, 2, 0.925602},  {173, 13, 0, 1, 11, 2, 0.988371},
        {227, 29, 0, 1, 13, 2, 0.962398},  {293, 17, 0, 1, 15, 2, 0.993150},
        {318, 12, 1, 1, 12, 6, 0.836463},  {398, 18, 1, 1, 18, 2, 0.951129},
        {437, 19, 1, 2, 19, 2, 0.954446},  {447, 37, 0, 1, 15, 6, 0.875019},
        {453, 19, 0, 1, 15, 6, 0.892697},  {635, 41, 0, 1, 15, 10, 0.813517},
        {717, 21, 1, 2, 21, 6, 0.892129},  {827, 15, 1, 1, 15, 14, 0.760800},
        {1077, 27, 1, 2, 27, 6, 0.911363}, {3053, 49, 0, 1, 41, 14, 0.886814},
    };
    return rows;
}

static QuadValue ratio_of(const QuadValue& L) {
    SquarefreeD f = L.field;
    return qv_normalize(L.q * i128(f.d()), L.p, L.den * f.sqrt_disc_coeff() * i128(f.d()),
                        f);
}

static std::string fmt_qv(const QuadValue& v) {
    return qv_to_string(v) + " = " + qv_to_decimal(v, 12);
}

std::vector<Check> verify_appendix() {
    std::vector<Check> out;
    for (const auto& row : reference_rows()) {
        SquarefreeD field(row.d);
        LminResult lr = lmin(field);
        {
            bool ok = lr.value.p == row.p && lr.value.q == row.q && lr.value.den == row.den;
            out.push_back({"exact value d=" + std::to_string(row.d), ok,
                           ok ? "" : "got " + fmt_qv(lr.value)});
        }
        {
            bool ok = lr.witness.a == row.wa && lr.witness.c == row.wc;
            out.push_back({"witness d=" + std::to_string(row.d), ok,
                           ok ? ""
                              : "got (a=" + std::to_string(lr.witness.a) +
                                    ", c=" + std::to_string(lr.witness.c) + ")"});
        }
        {
            std::string dec = qv_to_decimal(ratio_of(lr.value), 12);
            double got = std::stod(dec);
            bool ok = std::fabs(got - row.ratio6) < 1e-6;
            out.push_back({"ratio d=" + std::to_string(row.d), ok, ok ? "" : "got " + dec});
        }
    }
    return out;
}

std::vector<Check> verify_theorem1(uint64_t lo, uint64_t hi) {
    std::vector<Check> out;
    uint64_t checked = 0, bad = 0;
    std::string first_bad;
    auto flags = squarefree_flags(lo, hi);
    for (uint64_t d = lo; d <= hi; ++d) {
        if (!flags[d - lo]) continue;
        SquarefreeD field = SquarefreeD::unchecked(d);
        LminResult lr = lmin(field);
        QuadValue sqrt_disc = qv_normalize(0, field.sqrt_disc_coeff(), 1, field);
        QuadValue twice =
            qv_normalize(2 * lr.value.p, 2 * lr.value.q, lr.value.den, field);
        bool ok = qv_cmp(lr.value, sqrt_disc) < 0 && qv_cmp(twice, sqrt_disc) > 0;
        ++checked;
        if (!ok && bad++ == 0) first_bad = "d=" + std::to_string(d) + " L=" + fmt_qv(lr.value);
    }
    out.push_back({"sandwich on [" + std::to_string(lo) + ", " + std::to_string(hi) + "] (" +
                       std::to_string(checked) + " fields)",
                   bad == 0, bad ? std::to_string(bad) + " violations, first: " + first_bad : ""});
    return out;
}

std::vector<Check> verify_oracle(uint64_t lo, uint64_t hi) {
    std::vector<Check> out;
    uint64_t checked = 0, bad = 0;
    std::string first_bad;
    auto flags = squarefree_flags(lo, hi);
    for (uint64_t d = lo; d <= hi; ++d) {
        if (!flags[d - lo]) continue;
        SquarefreeD field = SquarefreeD::unchecked(d);
        LminResult lr = lmin(field);
        QuadValue brute = lmin_bruteforce(field);
        ++checked;
        if (!qv_eq(lr.value, brute) && bad++ == 0)
            first_bad = "d=" + std::to_string(d) + " enum=" + fmt_qv(lr.value) +
                        " brute=" + fmt_qv(brute);
    }
    out.push_back({"enumeration equals exhaustive search on [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "] (" + std::to_string(checked) + " fields)",
                   bad == 0, bad ? std::to_string(bad) + " mismatches, first: " + first_bad : ""});
    return out;
}

std::vector<Check> verify_nonresidue(uint64_t hi) {
    std::vector<Check> out;
    uint64_t n_exc = 0, bad_eq = 0, bad_lb = 0, bad_dec = 0;
    std::string first;
    auto flags = squarefree_flags(2, hi);
    for (uint64_t d = 2; d <= hi; ++d) {
        if (!flags[d - 2]) continue;
        SquarefreeD field = SquarefreeD::unchecked(d);
        if (!is_exceptional(field)) continue;
        ++n_exc;
        LminResult lr = lmin(field);
        LminResult cf = nonresidue_lmin(field);
        if (!qv_eq(lr.value, cf.value) || lr.witness.a != cf.witness.a ||
            lr.witness.c != cf.witness.c) {
            if (bad_eq++ == 0)
                first = "d=" + std::to_string(d) + " lmin=" + fmt_qv(lr.value) +
                        " closed=" + fmt_qv(cf.value);
        }
        // companion lower bound: L >= sqrt(disc) - 2 eps A for the largest
        // odd divisor A of d below sqrt(d)
        uint64_t A = largest_odd_divisor_below_sqrt(field);
        QuadValue slack = qv_sub(
            qv_add(lr.value, qv_rat(2 * i128(A), field.eps_den(), field)),
            qv_normalize(0, field.sqrt_disc_coeff(), 1, field));
        if (qv_sign(slack) < 0) ++bad_lb;
        try {
            ExceptionalForm ef = decompose_exceptional(field);
            u128 base = ef.four_variant ? u128(2 * ef.k - 1) * ef.A : u128(ef.k) * ef.A;
            u128 rec = base * base;
            u128 off = (ef.four_variant ? 4 : 2) * u128(ef.A);
            rec = ef.sign > 0 ? rec + off : rec - off;
            if (rec != d) ++bad_dec;
        } catch (const Error&) {
            ++bad_dec;
        }
    }
    out.push_back({"closed form equals lmin on all " + std::to_string(n_exc) +
                       " exceptional d <= " + std::to_string(hi),
                   bad_eq == 0, bad_eq ? std::to_string(bad_eq) + " mismatches, first: " + first : ""});
    out.push_back({"lower bound sqrt(disc) - 2 eps A holds", bad_lb == 0,
                   bad_lb ? std::to_string(bad_lb) + " violations" : ""});
    out.push_back({"every exceptional d decomposes as (kA)^2 +- 2A resp. ((2k-1)A)^2 +- 4A",
                   bad_dec == 0, bad_dec ? std::to_string(bad_dec) + " failures" : ""});
    if (hi == 10000)
        out.push_back({"exceptional count below 10^4 is 60", n_exc == 60,
                       n_exc == 60 ? "" : "got " + std::to_string(n_exc)});
    return out;
}

static void check_close(std::vector<Check>& out, const std::string& name, double got,
                        double want, double tol) {
    bool ok = std::fabs(got - want) < tol;
    char buf[64];
    std::snprintf(buf, sizeof buf, "got %.10f, want %.10f", got, want);
    out.push_back({name, ok, ok ? "" : buf});
}

std::vector<Check> verify_bounds() {
    std::vector<Check> out;

    // sup of L(d)/sqrt(disc) over the mod-4 classes on [2, 5000]
    auto sup4 = sup_per_class(2, 5000, 4, 0);
    struct Pin {
        uint64_t residue, d;
        double ratio;
    };
    for (const Pin& pin : {Pin{1, 293, 0.9931506043}, Pin{2, 398, 0.9511292364},
                           Pin{3, 227, 0.9623988018}}) {
        const ClassSup& cs = sup4[pin.residue];
        bool ok = cs.seen && cs.best.d == pin.d;
        out.push_back({"sup over d = " + std::to_string(pin.residue) + " mod 4 attained at d=" +
                           std::to_string(pin.d),
                       ok, ok ? "" : "got d=" + std::to_string(cs.seen ? cs.best.d : 0)});
        if (cs.seen)
            check_close(out, "sup ratio for class " + std::to_string(pin.residue) + " mod 4",
                        std::stod(cs.best.ratio), pin.ratio, 1e-8);
    }
    out.push_back({"no square-free d = 0 mod 4", !sup4[0].seen, sup4[0].seen ? "found one" : ""});

    // d = 1 mod 8 on [9, 10^4]: sup attained at 41, below (1 + sqrt 5)/4
    auto sup8 = sup_per_class(9, 10000, 8, 0);
    {
        const ClassSup& cs = sup8[1];
        bool ok = cs.seen && cs.best.d == 41;
        out.push_back({"sup over d = 1 mod 8 attained at d=41", ok,
                       ok ? "" : "got d=" + std::to_string(cs.seen ? cs.best.d : 0)});
        if (cs.seen) {
            check_close(out, "sup ratio for d = 1 mod 8", std::stod(cs.best.ratio),
                        0.7342606428, 1e-8);
            double bound = (1 + std::sqrt(5.0)) / 4; // 0.809017
            out.push_back({"class bound (1+sqrt 5)/4 holds for d = 1 mod 8",
                           std::stod(cs.best.ratio) < bound - 1e-9, cs.best.ratio});
        }
    }

    // d = 1 mod 3 on [4, 10^4]: sup attained at 13, below prime_class_bound(3)
    auto sup3 = sup_per_class(4, 10000, 3, 0);
    {
        const ClassSup& cs = sup3[1];
        bool ok = cs.seen && cs.best.d == 13;
        out.push_back({"sup over d = 1 mod 3 attained at d=13", ok,
                       ok ? "" : "got d=" + std::to_string(cs.seen ? cs.best.d : 0)});
        if (cs.seen) {
            check_close(out, "sup ratio for d = 1 mod 3", std::stod(cs.best.ratio),
                        0.8320502943, 1e-8);
            double bound = qv_to_double(prime_class_bound(3));
            out.push_back({"class bound for split 3 holds",
                           std::stod(cs.best.ratio) < bound - 1e-9, cs.best.ratio});
        }
    }

    struct BoundPin {
        uint64_t p;
        double value;
    };
    for (const BoundPin& bp : {BoundPin{3, 0.891806}, BoundPin{5, 0.956860},
                               BoundPin{7, 0.977845}, BoundPin{13, 0.993714}})
        check_close(out, "split-prime class bound for p=" + std::to_string(bp.p),
                    qv_to_double(prime_class_bound(bp.p)), bp.value, 1e-6);
    return out;
}

} // namespace quadmin
