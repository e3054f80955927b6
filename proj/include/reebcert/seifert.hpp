#ifndef REEBCERT_SEIFERT_HPP
#define REEBCERT_SEIFERT_HPP

#include <optional>
#include <string>
#include <vector>

#include "reebcert/exact.hpp"

namespace reebcert {

// Seifert invariants beta_i/alpha_i over the 2-sphere, stored reduced with
// positive denominators.
struct SeifertData {
    std::vector<Rational> fractions;
};

// Sum of the fractions, exact and reduced.
Rational euler_sum(const SeifertData& data);

// prod(alpha_i) * |sum beta_i/alpha_i|. Value 1 certifies an integral
// homology sphere; the quantity is insensitive to the orientation
// convention, which flips every sign at once.
Rational h1_order_indicator(const SeifertData& data);

// The row of facts this tool certifies or records about the Brieskorn
// sphere bounding the Milnor fibre of x^2 + y^3 + z^(6n-1).
struct BrieskornRecord {
    Int n;
    SeifertData seifert;  // M(-1/2, 1/3, n/(6n-1))
    bool is_homology_sphere = false;
    Int milnor_b2_plus;        // 2(n-1), the closed form for the Milnor fibre
    bool poincare_special_case = false;  // n = 1
    std::optional<Int> tight_count;      // 2 for n >= 2; recorded, not recomputed
    std::optional<bool> weinstein_holds;
    std::optional<bool> universally_tight;
    std::string tight_count_source;
    std::string orientation_note;
};

BrieskornRecord brieskorn(const Int& n);

}  // namespace reebcert

#endif
