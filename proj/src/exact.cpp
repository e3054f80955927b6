#include "reebcert/exact.hpp"

#include "reebcert/errors.hpp"

namespace reebcert {

Int div_round_nearest(const Int& a, const Int& b) {
    if (b == 0) throw InternalError("division by zero");
    Int q = a / b;  // truncated toward zero
    Int r = a - q * b;
    // |r| <= |b|/2 after adjustment
    if (2 * abs(r) > abs(b)) {
        if ((r < 0) == (b < 0))
            q += 1;
        else
            q -= 1;
    }
    return q;
}

Int mod_nonneg(const Int& x, const Int& m) {
    if (m == 0) return x;
    if (m < 0) throw InternalError("mod_nonneg: negative modulus");
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace reebcert
