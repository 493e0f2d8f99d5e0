// Times the integer scan kernel against the exact reference implementation
// and against itself under OpenMP, checking that all three agree.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <vector>

#include "quadmin/lmin.hpp"
#include "quadmin/scan.hpp"
#include "quadmin/scan_kernel.hpp"

using namespace quadmin;
using clock_type = std::chrono::steady_clock;

static double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

int main(int argc, char** argv) {
    CLI::App app{"benchmark: reference vs kernel vs parallel kernel"};
    uint64_t from = 2, to = 100000;
    int workers = 0;
    app.add_option("--from", from, "first d");
    app.add_option("--to", to, "last d");
    app.add_option("--workers", workers, "threads for the parallel run (default: all cores)");
    CLI11_PARSE(app, argc, argv);
    if (to < from) {
        std::fprintf(stderr, "empty range\n");
        return 1;
    }

    std::vector<uint8_t> sf = squarefree_flags(from, to);
    std::vector<uint64_t> ds;
    for (uint64_t d = from; d <= to; ++d)
        if (d >= 2 && sf[d - from]) ds.push_back(d);
    std::printf("range [%llu, %llu]: %zu square-free d\n", (unsigned long long)from,
                (unsigned long long)to, ds.size());

    // exact reference, serial
    auto t0 = clock_type::now();
    std::vector<LminResult> ref;
    ref.reserve(ds.size());
    for (uint64_t d : ds) ref.push_back(lmin(SquarefreeD::unchecked(d)));
    double t_ref = seconds_since(t0);

    // integer kernel, serial
    uint64_t pmax = isqrt64(to) + 2;
    std::vector<uint32_t> primes = primes_upto(pmax);
    KernelScratch scratch;
    t0 = clock_type::now();
    std::vector<KernelResult> ker;
    ker.reserve(ds.size());
    for (uint64_t d : ds) ker.push_back(lmin_kernel(d, primes, scratch));
    double t_ker = seconds_since(t0);

    for (size_t i = 0; i < ds.size(); ++i) {
        SquarefreeD f = SquarefreeD::unchecked(ds[i]);
        QuadValue kv = qv_normalize(i128(ker[i].u), i128(ker[i].v), f.eps_den(), f);
        if (!qv_eq(kv, ref[i].value) || ker[i].witness_a != uint64_t(ref[i].witness.a) ||
            ker[i].witness_c != uint64_t(ref[i].witness.c)) {
            std::fprintf(stderr, "kernel disagrees with reference at d=%llu\n",
                         (unsigned long long)ds[i]);
            return 2;
        }
    }

    // integer kernel under OpenMP, via the scan driver
    ScanOptions opt;
    opt.from = from;
    opt.to = to;
    opt.workers = workers;
    opt.with_ratio = false;
    t0 = clock_type::now();
    std::vector<ScanRecord> recs;
    scan_for_each(opt, [&](const ScanRecord& r) { recs.push_back(r); });
    double t_par = seconds_since(t0);

    if (recs.size() != ds.size()) {
        std::fprintf(stderr, "parallel run visited %zu fields, expected %zu\n", recs.size(),
                     ds.size());
        return 2;
    }
    for (size_t i = 0; i < ds.size(); ++i) {
        SquarefreeD f = SquarefreeD::unchecked(ds[i]);
        QuadValue rv = qv_normalize(recs[i].L_p, recs[i].L_q, recs[i].L_den, f);
        if (recs[i].d != ds[i] || !qv_eq(rv, ref[i].value)) {
            std::fprintf(stderr, "parallel run disagrees at d=%llu\n",
                         (unsigned long long)ds[i]);
            return 2;
        }
    }

    std::printf("all three runs agree on every field\n\n");
    std::printf("%-28s %10s %10s\n", "variant", "seconds", "speedup");
    std::printf("%-28s %10.3f %10s\n", "reference (exact, serial)", t_ref, "1.00x");
    std::printf("%-28s %10.3f %9.2fx\n", "kernel (serial)", t_ker, t_ref / t_ker);
    std::printf("%-28s %10.3f %9.2fx\n", "kernel (OpenMP)", t_par, t_ref / t_par);
    return 0;
}
