#include "quadmin/scan.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "quadmin/error.hpp"
#include "quadmin/mahler.hpp"
#include "quadmin/structure.hpp"

namespace quadmin {

static ScanRecord build_record(uint64_t d, const std::vector<uint32_t>& primes,
                               KernelScratch& scratch, bool with_ratio) {
    SquarefreeD field = SquarefreeD::unchecked(d);
    KernelResult kr = lmin_kernel(d, primes, scratch);
    QuadValue L = qv_normalize(kr.u, kr.v, field.eps_den(), field);

    ScanRecord rec;
    rec.d = d;
    rec.dmod4 = field.mod4();
    rec.disc = field.disc();
    rec.L_p = int64_t(L.p);
    rec.L_q = int64_t(L.q);
    rec.L_den = int64_t(L.den);
    rec.witness_a = kr.witness_a;
    rec.witness_c = kr.witness_c;
    rec.k = lead_coeff_k(canonicalize(int64_t(kr.witness_a), 1, int64_t(kr.witness_c), field));
    rec.exceptional = is_exceptional(field);
    if (with_ratio) {
        // L / sqrt(disc) = (q d + p sqrt(d)) / (den * w * d), w = sqrt(disc)/sqrt(d)
        QuadValue ratio = qv_normalize(L.q * i128(d), L.p,
                                       L.den * field.sqrt_disc_coeff() * i128(d), field);
        rec.ratio = qv_to_decimal(ratio, 12);
    }
    return rec;
}

ScanRecord scan_record_for(SquarefreeD field) {
    auto primes = primes_upto(uint32_t(isqrt64(field.d())) + 1);
    KernelScratch scratch;
    return build_record(field.d(), primes, scratch, true);
}

void scan_for_each(const ScanOptions& opt,
                   const std::function<void(const ScanRecord&)>& emit,
                   const std::function<void(uint64_t)>& after_wave) {
    if (opt.from < 2 || opt.to < opt.from || opt.to >= (1ull << 32))
        throw OutOfRange("scan range must satisfy 2 <= from <= to < 2^32");
    if (opt.block == 0) throw OutOfRange("block size must be positive");
    if (opt.filter && (opt.filter->first < 2 || opt.filter->second >= opt.filter->first))
        throw OutOfRange("filter must be (mod, residue) with residue < mod");
    uint64_t start = std::max(opt.from, opt.resume_after + 1);
    if (start > opt.to) return;

    int workers = opt.workers > 0 ? opt.workers : omp_get_max_threads();
    auto primes = primes_upto(uint32_t(isqrt64(opt.to)) + 1);
    uint64_t wave_span = opt.block * uint64_t(std::max(4 * workers, 8));

    for (uint64_t wlo = start; wlo <= opt.to; wlo += wave_span) {
        uint64_t whi = std::min(opt.to, wlo + wave_span - 1);
        auto flags = squarefree_flags(wlo, whi);
        auto nb = long((whi - wlo) / opt.block + 1);
        std::vector<std::vector<ScanRecord>> out(static_cast<size_t>(nb));

#pragma omp parallel num_threads(workers)
        {
            KernelScratch scratch;
#pragma omp for schedule(dynamic)
            for (long bi = 0; bi < nb; ++bi) {
                uint64_t lo = wlo + uint64_t(bi) * opt.block;
                uint64_t hi = std::min(whi, lo + opt.block - 1);
                auto& bucket = out[size_t(bi)];
                for (uint64_t d = lo; d <= hi; ++d) {
                    if (!flags[d - wlo]) continue;
                    if (opt.filter && d % opt.filter->first != opt.filter->second) continue;
                    bucket.push_back(build_record(d, primes, scratch, opt.with_ratio));
                }
            }
        }
        for (auto& bucket : out)
            for (auto& rec : bucket) emit(rec);
        if (after_wave) after_wave(whi);
        if (opt.stop_after && whi >= opt.stop_after) return;
    }
}

std::string csv_header() {
    return "d,dmod4,D,L_p,L_q,L_den,ratio,witness_a,witness_c,k,exceptional";
}

std::string csv_line(const ScanRecord& r) {
    std::string s;
    s.reserve(96);
    s += std::to_string(r.d);
    s += ',';
    s += std::to_string(r.dmod4);
    s += ',';
    s += std::to_string(r.disc);
    s += ',';
    s += std::to_string(r.L_p);
    s += ',';
    s += std::to_string(r.L_q);
    s += ',';
    s += std::to_string(r.L_den);
    s += ',';
    s += r.ratio;
    s += ',';
    s += std::to_string(r.witness_a);
    s += ',';
    s += std::to_string(r.witness_c);
    s += ',';
    s += std::to_string(r.k);
    s += ',';
    s += r.exceptional ? '1' : '0';
    return s;
}

static void write_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::trunc);
        if (!f) throw IoError("cannot write " + tmp);
        f << content;
        f.flush();
        if (!f) throw IoError("write failed for " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw IoError("cannot rename " + tmp + " to " + path);
}

// keeps the header and every line whose leading d field parses and is at
// most `upto`; everything from the first bad or too-new line on is dropped
static void truncate_csv(const std::string& path, uint64_t upto) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    std::string kept, line;
    if (!std::getline(in, line) || line != csv_header())
        throw IoError("existing CSV has an unexpected header: " + path);
    kept = line + "\n";
    while (std::getline(in, line)) {
        size_t comma = line.find(',');
        if (comma == std::string::npos || comma == 0) break;
        uint64_t d = 0;
        bool ok = true;
        for (size_t i = 0; i < comma; ++i) {
            if (line[i] < '0' || line[i] > '9') {
                ok = false;
                break;
            }
            d = d * 10 + uint64_t(line[i] - '0');
        }
        if (!ok || d > upto) break;
        kept += line;
        kept += '\n';
    }
    write_atomic(path, kept);
}

void scan_range(const ScanOptions& opt_in, const ScanIo& io) {
    ScanOptions opt = opt_in;
    bool resuming = false;
    if (!io.checkpoint_path.empty()) {
        if (io.csv_path.empty())
            throw IoError("checkpointing requires a CSV output path");
        std::ifstream ck(io.checkpoint_path);
        if (ck) {
            std::string linebuf;
            std::getline(ck, linebuf);
            const std::string prefix = "last_completed_d=";
            if (linebuf.rfind(prefix, 0) != 0)
                throw IoError("malformed checkpoint file " + io.checkpoint_path);
            opt.resume_after = std::stoull(linebuf.substr(prefix.size()));
            resuming = true;
        }
    }

    std::ostream* outp = &std::cout;
    std::ofstream file;
    if (!io.csv_path.empty()) {
        if (resuming) {
            std::ifstream probe(io.csv_path);
            if (!probe) throw IoError("checkpoint exists but CSV does not: " + io.csv_path);
            probe.close();
            truncate_csv(io.csv_path, opt.resume_after);
            file.open(io.csv_path, std::ios::app);
        } else {
            file.open(io.csv_path, std::ios::trunc);
            if (file) file << csv_header() << "\n";
        }
        if (!file) throw IoError("cannot open " + io.csv_path);
        outp = &file;
    } else {
        if (opt.resume_after == 0) *outp << csv_header() << "\n";
    }

    scan_for_each(
        opt, [&](const ScanRecord& rec) { *outp << csv_line(rec) << "\n"; },
        [&](uint64_t last_d) {
            outp->flush();
            if (!outp->good()) throw IoError("CSV write failed");
            if (!io.checkpoint_path.empty())
                write_atomic(io.checkpoint_path,
                             "last_completed_d=" + std::to_string(last_d) + "\n");
        });
    outp->flush();
    if (!outp->good()) throw IoError("CSV write failed");
}

std::vector<uint64_t> census_ratio(uint64_t from, uint64_t to, uint64_t num,
                                   uint64_t den, int workers) {
    if (den == 0 || num == 0) throw OutOfRange("threshold must be positive");
    ScanOptions opt;
    opt.from = from;
    opt.to = to;
    opt.workers = workers;
    opt.with_ratio = false;
    std::vector<uint64_t> hits;
    scan_for_each(opt, [&](const ScanRecord& rec) {
        SquarefreeD field = SquarefreeD::unchecked(rec.d);
        QuadValue L = qv_normalize(rec.L_p, rec.L_q, rec.L_den, field);
        // L > (num/den) sqrt(disc) = (num w / den) sqrt(d)
        QuadValue thr = qv_normalize(0, i128(num) * field.sqrt_disc_coeff(), den, field);
        if (qv_cmp(L, thr) > 0) hits.push_back(rec.d);
    });
    return hits;
}

std::vector<ClassSup> sup_per_class(uint64_t from, uint64_t to, uint64_t mod,
                                    int workers) {
    if (mod < 2) throw OutOfRange("modulus must be at least 2");
    std::vector<ClassSup> sup(mod);
    for (uint64_t r = 0; r < mod; ++r) sup[r].residue = r;
    auto ratio_mpf = [](const ScanRecord& rec) {
        SquarefreeD field = SquarefreeD::unchecked(rec.d);
        QuadValue L = qv_normalize(rec.L_p, rec.L_q, rec.L_den, field);
        QuadValue ratio = qv_normalize(L.q * i128(rec.d), L.p,
                                       L.den * field.sqrt_disc_coeff() * i128(rec.d), field);
        return qv_to_mpf(ratio, 512);
    };
    auto ratio_dbl = [](const ScanRecord& rec) {
        double sd = std::sqrt(double(rec.d));
        double w = rec.d % 4 == 1 ? 1.0 : 2.0;
        return (double(rec.L_p) + double(rec.L_q) * sd) / (double(rec.L_den) * w * sd);
    };
    ScanOptions opt;
    opt.from = from;
    opt.to = to;
    opt.workers = workers;
    opt.with_ratio = false;
    scan_for_each(opt, [&](const ScanRecord& rec) {
        ClassSup& cs = sup[rec.d % mod];
        if (!cs.seen) {
            cs.best = rec;
            cs.seen = true;
            return;
        }
        // cheap double prefilter, exact-precision tie resolution
        double dn = ratio_dbl(rec), dc = ratio_dbl(cs.best);
        if (dn < dc - 1e-9) return;
        if (dn > dc + 1e-9 || ratio_mpf(rec) > ratio_mpf(cs.best)) cs.best = rec;
    });
    for (auto& cs : sup)
        if (cs.seen && cs.best.ratio.empty()) {
            KernelScratch scratch;
            auto primes = primes_upto(uint32_t(isqrt64(cs.best.d)) + 1);
            cs.best = build_record(cs.best.d, primes, scratch, true);
        }
    return sup;
}

// |c - sqrt(d)|^5 < d^2, checked exactly: (c - sqrt d)^5 = u - v sqrt(d)
// with u = c^5 + 10 c^3 d + 5 c d^2 and v = 5 c^4 + 10 c^2 d + d^2
static bool window_ok(uint64_t c, uint64_t d) {
    i128 cc = c, dd = d;
    i128 u = cc * cc * cc * cc * cc + 10 * cc * cc * cc * dd + 5 * cc * dd * dd;
    i128 v = 5 * cc * cc * cc * cc + 10 * cc * cc * dd + dd * dd;
    i128 d2 = dd * dd;
    return quad_sign(u - d2, -v, d) < 0 && quad_sign(-(u + d2), v, d) < 0;
}

static bool pair_exists_impl(uint64_t d, bool even_variant, PairWitness* wit) {
    uint64_t s = isqrt64(d);
    uint64_t t = iroot5(u128(d) * d);
    uint64_t clo = s > t + 1 ? s - t - 1 : 1;
    uint64_t chi = s + t + 1;
    for (uint64_t a = even_variant ? 1 : 0;; a += even_variant ? 2 : 1) {
        u128 a5 = u128(a) * a;
        a5 = a5 * a5 * a;
        if (a5 >= u128(d) * d) break;
        uint64_t n = d - a * a; // a^5 < d^2 forces a < sqrt(d)
        for (uint64_t c = clo; c <= chi; ++c) {
            if (even_variant) {
                if (c % 2 != 0 || n % (2 * c) != 0) continue;
            } else if (n % c != 0) {
                continue;
            }
            if (!window_ok(c, d)) continue;
            if (wit) *wit = PairWitness{a, c};
            return true;
        }
    }
    return false;
}

std::optional<PairWitness> pair_exists(SquarefreeD field, bool even_variant) {
    if (even_variant && !field.one_mod4())
        throw OutOfRange("even variant applies to d = 1 mod 4 only");
    PairWitness w;
    if (pair_exists_impl(field.d(), even_variant, &w)) return w;
    return std::nullopt;
}

std::vector<uint64_t> pair_failures(uint64_t from, uint64_t to, bool even_variant,
                                    int workers) {
    if (from < 2 || to < from || to >= (1ull << 32))
        throw OutOfRange("range must satisfy 2 <= from <= to < 2^32");
    int nw = workers > 0 ? workers : omp_get_max_threads();
    auto flags = squarefree_flags(from, to);
    std::vector<std::vector<uint64_t>> parts(static_cast<size_t>(nw));
    long span = long(to - from + 1);
#pragma omp parallel num_threads(nw)
    {
        auto& mine = parts[size_t(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 512)
        for (long i = 0; i < span; ++i) {
            uint64_t d = from + uint64_t(i);
            if (!flags[uint64_t(i)]) continue;
            if (even_variant && d % 4 != 1) continue;
            if (!pair_exists_impl(d, even_variant, nullptr)) mine.push_back(d);
        }
    }
    std::vector<uint64_t> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace quadmin
