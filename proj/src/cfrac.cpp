#include "reebcert/cfrac.hpp"

#include <sstream>

#include "reebcert/errors.hpp"

namespace reebcert {

CoprimePair::CoprimePair(Int p_, Int q_) : p(std::move(p_)), q(std::move(q_)) {
    if (q < 1 || p <= q) {
        std::ostringstream os;
        os << "need p > q >= 1, got p=" << p << " q=" << q;
        throw InputError(os.str());
    }
    if (gcd(p, q) != 1) {
        std::ostringstream os;
        os << "p=" << p << " and q=" << q << " are not coprime";
        throw InputError(os.str());
    }
}

ContinuedFraction neg_cfrac(const CoprimePair& pair) {
    ContinuedFraction cf{{}, pair};
    // n = -ceil(p/q), then recurse on -q/r where r = (-n)q - p. The
    // denominator strictly decreases, and p > q keeps every n <= -2.
    Int p = pair.p, q = pair.q;
    while (true) {
        Int a = (p + q - 1) / q;  // ceil for positive p, q
        cf.coefficients.push_back(-a);
        Int r = a * q - p;
        if (r == 0) break;  // q was 1
        p = q;
        q = r;
    }
    return cf;
}

Rational eval_cfrac(const std::vector<Int>& coefficients) {
    if (coefficients.empty()) throw InputError("empty continued fraction");
    for (const Int& n : coefficients)
        if (n >= -1) {
            std::ostringstream os;
            os << "coefficient " << n << " is not <= -2";
            throw InputError(os.str());
        }
    // Continuant recurrence from the right; consecutive values are coprime,
    // so num/den is already in lowest terms.
    Int num = coefficients.back();
    Int den = 1;
    for (std::size_t i = coefficients.size() - 1; i-- > 0;) {
        Int next_num = coefficients[i] * num - den;
        den = num;
        num = std::move(next_num);
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

QSequence q_sequence(const ContinuedFraction& cf) {
    const auto& n = cf.coefficients;
    const std::size_t k = n.size();
    QSequence qs;
    qs.values.reserve(k + 2);
    qs.values.push_back(0);
    qs.values.push_back(1);
    for (std::size_t j = 1; j <= k; ++j)
        qs.values.push_back(-qs.values[j - 1] - n[k - j] * qs.values[j]);
    return qs;
}

bool is_odd_lens(const ContinuedFraction& cf) {
    for (const Int& n : cf.coefficients)
        if (n % 2 != 0) return true;
    return false;
}

}  // namespace reebcert
