#pragma once

#include <functional>

#include "quadmin/mahler.hpp"

namespace quadmin {

// Structured element (a + sqrt(d))/c. Admissibility:
//   0 <= a < sqrt(d), c >= 1, c | d - a^2
//   and when d = 1 mod 4 additionally: a odd, c even, 2c | d - a^2.
// For admissible (a, c) the Mahler measure of (a + sqrt(d))/c equals
// eps * max{c, a + sqrt(d), (d - a^2)/c} with eps = 1/2 iff d = 1 mod 4.
struct Candidate {
    uint64_t a;
    uint64_t c;
};

void validate_candidate(const Candidate& cand, SquarefreeD field);
bool candidate_ok(const Candidate& cand, SquarefreeD field);
QuadValue candidate_measure(const Candidate& cand, SquarefreeD field);

// Explicit element whose measure is below sqrt(disc): the candidate (m, 2)
// with m the largest integer below sqrt(d) of d's parity. Seeds the search.
Candidate initial_upper_bound_witness(SquarefreeD field);
QuadValue initial_upper_bound(SquarefreeD field);

struct LminResult {
    QuadValue value;
    Candidate witness;     // smallest c, then smallest a among minimizers
    MeasureResult measure; // full data for (witness.a + sqrt(d))/witness.c
};

// minimal Mahler measure over all irrationals of Q(sqrt d); serial reference
LminResult lmin(SquarefreeD field);

// Exhaustive minimum over integer quadratics, for cross-checking lmin.
// Only practical for small d.
QuadValue lmin_bruteforce(SquarefreeD field); // throws OracleTooLarge above 500

// Visits every primitive A x^2 + B x + C (A >= 1) with irrational roots in
// Q(sqrt d) inside the box that provably contains all polynomials of
// measure < sqrt(disc). disc(poly) = f^2 d.
void for_each_small_quadratic(
    SquarefreeD field,
    const std::function<void(i128 A, i128 B, i128 C, uint64_t f, const QuadValue& measure)>& visit);

} // namespace quadmin
