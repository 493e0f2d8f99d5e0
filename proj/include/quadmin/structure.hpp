#pragma once

#include <optional>

#include "quadmin/lmin.hpp"

namespace quadmin {

// Jacobi symbol (a/n), n odd positive
int jacobi(int64_t a, uint64_t n);

// d is exceptional when every odd prime p not dividing d with
// p < sqrt(disc)/2 has (d/p) = -1. Fields with d = 1 mod 8 are never
// exceptional (2 splits).
bool is_exceptional(SquarefreeD field);

// largest odd divisor A of d with A < sqrt(d) (at least 1)
uint64_t largest_odd_divisor_below_sqrt(SquarefreeD field);

// closed-form minimum for exceptional d, built from the divisor-structured
// elements only; must agree with lmin
LminResult nonresidue_lmin(SquarefreeD field);

// d = (kA)^2 +- 2A, or d = ((2k-1)A)^2 +- 4A when d = 1 mod 4,
// with A odd, A | d, A < sqrt(disc)/2
struct ExceptionalForm {
    uint64_t A;
    uint64_t k;
    bool four_variant;
    int sign; // +1 or -1
};
ExceptionalForm decompose_exceptional(SquarefreeD field);

// smallest nonnegative r with r^2 = a mod p^l; p prime.
// p = 2 requires a = 1 mod 4 for l = 2 and a = 1 mod 8 for l >= 3.
uint64_t sqrt_mod_prime_power(uint64_t a, uint64_t p, unsigned l);

struct SplitPrime {
    uint64_t p;                // smallest odd prime with p not | d, (d/p) = 1
    bool below_half_sqrt_disc; // p < sqrt(disc)/2
};
SplitPrime first_split_prime(SquarefreeD field);

// Upper bound for L(d)/sqrt(disc) as a function of lambda in (0, 1):
//   (1 + lambda + sqrt((1-lambda)^2 - 4 lambda^2))/2   lambda < (sqrt5 - 1)/4
//   1/(4 lambda)                                        lambda < (sqrt3 - 1)/2
//   (1 + lambda)/2                                      otherwise
// Branch selection is exact for rational lambda and for lambda in the
// fields Q(sqrt 5)/Q(sqrt 3); 512-bit numeric otherwise.
mpf_class lambda_bound(const QuadValue& lambda);

struct BoundCertificate {
    uint64_t q;          // prime power p^l used as the modulus
    uint64_t r0;         // smallest square root of d mod q
    int64_t r;           // parity-adjusted representative below sqrt(d)
    QuadValue lambda;    // q/sqrt(d) for odd q, 2^(l-2)/sqrt(d) for q = 2^l
    mpf_class bound;     // lambda_bound(lambda): certified L(d)/sqrt(disc) bound
    MeasureResult alpha1;
    MeasureResult alpha2; // alpha1 - 1
    QuadValue achieved;   // min of the two measures; lmin(d) <= achieved
};
BoundCertificate residue_upper_bound(SquarefreeD field, uint64_t q);

// Exact supremum of L(d)/sqrt(disc) over the class of d that are quadratic
// residues mod the odd prime p: with W = (p-1)^2 + 4 = s^2 w, the value is
// (W - 1 - p + p s sqrt(w)) / (2 (W - 1)), an element of Q(sqrt w).
QuadValue prime_class_bound(uint64_t p);

// Modulus choice for residue_upper_bound: the largest admissible prime power
// (2^l when d = 1 mod 8, else a power of the first split prime) that keeps
// lambda below the last branch point (sqrt(3)-1)/2 where possible, falling
// back to the bare prime while lambda < 1. nullopt when no power applies.
std::optional<uint64_t> suggest_modulus(SquarefreeD field);

} // namespace quadmin
