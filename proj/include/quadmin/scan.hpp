#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "quadmin/lmin.hpp"
#include "quadmin/scan_kernel.hpp"

namespace quadmin {

struct ScanRecord {
    uint64_t d;
    int dmod4;
    uint64_t disc;
    int64_t L_p, L_q, L_den; // L(d) = (L_p + L_q sqrt(d)) / L_den, normalized
    std::string ratio;       // L(d)/sqrt(disc) to 12 digits; empty if skipped
    uint32_t witness_a, witness_c;
    uint64_t k;
    bool exceptional;
};

struct ScanOptions {
    uint64_t from = 2;
    uint64_t to = 2;
    int workers = 0; // 0: OpenMP default
    std::optional<std::pair<uint64_t, uint64_t>> filter; // keep d = second mod first
    uint64_t resume_after = 0; // skip every d at or below this
    uint64_t stop_after = 0;   // testing hook: stop after the wave covering this d
    bool with_ratio = true;
    uint64_t block = 1024; // fixed block size keeps output independent of workers
};

// Emits records for every square-free d in [from, to] in ascending order.
// after_wave(last_d) runs after each wave of blocks has been emitted;
// emission order and record contents do not depend on the worker count.
void scan_for_each(const ScanOptions& opt,
                   const std::function<void(const ScanRecord&)>& emit,
                   const std::function<void(uint64_t)>& after_wave = {});

ScanRecord scan_record_for(SquarefreeD field); // single-d convenience

std::string csv_header();
std::string csv_line(const ScanRecord& r);

struct ScanIo {
    std::string csv_path;        // empty: write to stdout
    std::string checkpoint_path; // empty: no checkpointing
};
// Full scan with CSV output, checkpoint after every wave, resume+truncate
// semantics when a checkpoint file is present.
void scan_range(const ScanOptions& opt, const ScanIo& io);

// d in [from, to] with L(d)/sqrt(disc) > num/den, compared exactly
std::vector<uint64_t> census_ratio(uint64_t from, uint64_t to, uint64_t num,
                                   uint64_t den, int workers);

struct ClassSup {
    uint64_t residue;
    bool seen = false;
    ScanRecord best; // record with the largest ratio in this class
};
std::vector<ClassSup> sup_per_class(uint64_t from, uint64_t to, uint64_t mod,
                                    int workers);

struct PairWitness {
    uint64_t a, c;
};
// Looks for (a, c) with a^5 < d^2, |c - sqrt(d)|^5 < d^2 and c | d - a^2
// (even variant: a odd, c even, 2c | d - a^2). First witness in (a, c) order.
std::optional<PairWitness> pair_exists(SquarefreeD field, bool even_variant);

// square-free d in [from, to] without such a pair (even variant: only
// d = 1 mod 4 are considered)
std::vector<uint64_t> pair_failures(uint64_t from, uint64_t to, bool even_variant,
                                    int workers);

} // namespace quadmin
