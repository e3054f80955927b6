#ifndef REEBCERT_LENS_HPP
#define REEBCERT_LENS_HPP

#include <functional>
#include <string>
#include <vector>

#include "reebcert/cfrac.hpp"
#include "reebcert/surgery.hpp"

namespace reebcert {

// L(p,q) together with everything derived from its expansion [n1,...,nk].
struct LensSpace {
    CoprimePair pair;
    ContinuedFraction cf;
    QSequence qseq;
    bool odd;
};

LensSpace make_lens_space(const CoprimePair& pair);
LensSpace make_lens_space(Int p, Int q);

// One tight contact structure: the rotation numbers (r1,...,rk) of the
// surgery chain, rj running over n+2, n+4, ..., -n-2 for n = nj.
struct RotationTuple {
    std::vector<Int> values;

    bool operator==(const RotationTuple&) const = default;
};

// [e0,...,e(k+1)] mod p: images of the chain generators against the last
// one, c(k+1-j) = ej * ck in H1. Same recurrence as the q-sequence, so
// ej == qj (mod p) throughout and e(k+1) == 0.
struct ESequence {
    std::vector<Int> values;
};

// The admissible rotation numbers for one expansion coefficient n <= -2:
// an arithmetic progression of step 2 and length |n+1| centred on zero.
std::vector<Int> allowed_rotations(const Int& n);

// |(n1+1)(n2+1)...(nk+1)|, the number of tight structures up to isotopy.
Int tight_count(const LensSpace& lens);

// All admissible tuples in lexicographic order, each coordinate ascending.
std::vector<RotationTuple> enumerate_tight(const LensSpace& lens);

// Streaming variant; return false from the callback to stop early.
void for_each_tight(const LensSpace& lens, const std::function<bool(const RotationTuple&)>& fn);

ESequence e_sequence(const LensSpace& lens);

// Residue mod p of the Reeb-link class -sum_j rj e(k+1-j), reported against
// the generator ck (the class of the last chain handle's cocore boundary).
Int reeb_class(const LensSpace& lens, const RotationTuple& rot);

struct NoncontractibleCertificate {
    bool noncontractible = false;
    Int reeb_class_mod_p;
    std::string statement;
};

// True iff the Reeb-link class is nonzero mod p; since pi1 = H1 = Z_p, a
// nonzero class forces a non-contractible Reeb-link component.
NoncontractibleCertificate noncontractible_certificate(const LensSpace& lens,
                                                       const RotationTuple& rot);

// The linked chain of unknots presenting (L(p,q), xi_r): tb(Kj) = nj + 1,
// rot(Kj) = rj, tridiagonal linking matrix with the nj on the diagonal.
FramedLinkDiagram lens_to_diagram(const LensSpace& lens, const RotationTuple& rot);

// Sum_j |rj| q(k+1-j) <= p - q - 1 holds for every admissible tuple; the
// survey rechecks it cell by cell.
Int chain_bound_lhs(const LensSpace& lens, const RotationTuple& rot);

struct SurveyRow {
    Int p;
    Int q;
    std::vector<Int> coefficients;
    bool odd = false;
    Int tight;
    Int tuples_checked;
    Int min_class;         // minimum reeb_class over the tuples checked
    Int class_violations;  // tuples with class 0 on an odd lens space
    Int bound_violations;
    bool capped = false;
};

struct SurveyReport {
    Int pmax;
    std::vector<SurveyRow> rows;
    Int lens_spaces;
    Int odd_lens_spaces;
    Int tuples_checked;
    Int violations;
    Int capped_cells;
};

struct SurveyOptions {
    Int tuple_cap = 1000000;
    bool parallel = false;
};

// One row per coprime (p,q), q < p <= pmax, in (p,q) order. Cells are
// independent, so the parallel path only changes scheduling, never output.
SurveyReport survey(const Int& pmax, const SurveyOptions& options = {});

}  // namespace reebcert

#endif
