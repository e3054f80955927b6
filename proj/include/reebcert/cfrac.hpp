#ifndef REEBCERT_CFRAC_HPP
#define REEBCERT_CFRAC_HPP

#include <vector>

#include "reebcert/exact.hpp"

namespace reebcert {

// p > q >= 1, gcd(p, q) = 1. Checked at construction.
struct CoprimePair {
    Int p;
    Int q;

    CoprimePair(Int p_, Int q_);
};

// The expansion [n1,...,nk] of -p/q with every coefficient <= -2. It exists
// and is unique for every coprime pair; odd lens spaces are the ones whose
// expansion contains an odd coefficient.
struct ContinuedFraction {
    std::vector<Int> coefficients;
    CoprimePair source;
};

// [q0,...,q(k+1)] with q0 = 0, q1 = 1 and q(j+1) = -q(j-1) - n(k+1-j)*qj.
// Always ends with qk = q, q(k+1) = p and is strictly increasing past q0.
struct QSequence {
    std::vector<Int> values;
};

ContinuedFraction neg_cfrac(const CoprimePair& pair);

// Exact value n1 - 1/(n2 - 1/(... - 1/nk)) in lowest terms; inverse of
// neg_cfrac. Rejects empty input or any coefficient >= -1.
Rational eval_cfrac(const std::vector<Int>& coefficients);

QSequence q_sequence(const ContinuedFraction& cf);

bool is_odd_lens(const ContinuedFraction& cf);

}  // namespace reebcert

#endif
