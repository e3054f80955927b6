#include "reebcert/seifert.hpp"

#include <sstream>

#include "reebcert/errors.hpp"

namespace reebcert {

Rational euler_sum(const SeifertData& data) {
    Rational sum = 0;
    for (const Rational& f : data.fractions) sum += f;
    return sum;
}

Rational h1_order_indicator(const SeifertData& data) {
    Rational product = 1;
    for (const Rational& f : data.fractions) product *= rat_den(f);
    Rational sum = euler_sum(data);
    if (sum < 0) sum = -sum;
    return product * sum;
}

BrieskornRecord brieskorn(const Int& n) {
    if (n < 1) {
        std::ostringstream os;
        os << "Brieskorn index must be >= 1, got " << n;
        throw InputError(os.str());
    }
    BrieskornRecord rec;
    rec.n = n;
    rec.seifert.fractions = {Rational(-1, 2), Rational(1, 3), Rational(n, 6 * n - 1)};
    rec.is_homology_sphere = h1_order_indicator(rec.seifert) == 1;
    rec.milnor_b2_plus = 2 * (n - 1);
    rec.orientation_note =
        "homology-sphere status is certified from the Seifert fractions; the orientation "
        "matching against the Milnor-fibre boundary is a recorded convention, not verified.";
    if (n == 1) {
        rec.poincare_special_case = true;
        return rec;
    }
    rec.tight_count = 2;
    rec.tight_count_source =
        "recorded classification: exactly two tight contact structures, both Stein fillable; "
        "not recomputed by this tool.";
    rec.weinstein_holds = true;
    rec.universally_tight = true;
    return rec;
}

}  // namespace reebcert
