#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quadmin {

struct Check {
    std::string name;
    bool pass;
    std::string detail; // empty when passing
};

bool all_pass(const std::vector<Check>& checks);

// Reference row for one of the 26 fields with known minimal measure:
// L(d) = (p + q sqrt(d))/den, witness element (a + sqrt(d))/c, and the
// ratio L(d)/sqrt(disc) rounded to 6 digits.
struct ReferenceRow {
    uint64_t d;
    int64_t p, q, den;
    uint64_t wa, wc;
    double ratio6;
};
const std::vector<ReferenceRow>& reference_rows();

// exact minima, witnesses and 6-digit ratios for the reference fields
std::vector<Check> verify_appendix();

// strict sandwich sqrt(disc)/2 < L(d) < sqrt(disc) for square-free d in [lo, hi]
std::vector<Check> verify_theorem1(uint64_t lo = 2, uint64_t hi = 10000);

// reference enumeration against the exhaustive quadratic search
std::vector<Check> verify_oracle(uint64_t lo = 2, uint64_t hi = 200);

// closed form = lmin, companion lower bound, and decomposability for every
// exceptional d up to hi
std::vector<Check> verify_nonresidue(uint64_t hi = 10000);

// residue-class ratio bounds and per-class suprema
std::vector<Check> verify_bounds();

} // namespace quadmin
