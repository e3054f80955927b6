#include "reebcert/smith.hpp"

#include "reebcert/errors.hpp"

namespace reebcert {

namespace {

// Least-|value| nonzero entry of the trailing submatrix starting at (t, t).
// A +-1 wins immediately, which keeps the scan cheap on the long, nearly
// diagonal matrices produced by surgery chains.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < d.rows(); ++i) {
        for (std::size_t j = t; j < d.cols(); ++j) {
            const Int& e = d.at(i, j);
            if (e == 0) continue;
            Int mag = abs(e);
            if (!found || mag < best) {
                found = true;
                best = mag;
                pi = i;
                pj = j;
                if (best == 1) return true;
            }
        }
    }
    return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SmithDecomposition s{a, IntMatrix::identity(m), IntMatrix::identity(n)};
    IntMatrix& d = s.d;

    const std::size_t rank_bound = std::min(m, n);
    for (std::size_t t = 0; t < rank_bound; ++t) {
        std::size_t pi = t, pj = t;
        if (!find_pivot(d, t, pi, pj)) break;  // remaining block is zero
        d.swap_rows(t, pi);
        s.u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        s.v.swap_cols(t, pj);

        for (;;) {
            // Clear the pivot column, then the pivot row. A nonzero
            // remainder becomes the new, strictly smaller pivot.
            bool disturbed = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = div_round_nearest(d.at(i, t), d.at(t, t));
                d.add_row_multiple(i, t, -q);
                s.u.add_row_multiple(i, t, -q);
                if (d.at(i, t) != 0) {
                    d.swap_rows(t, i);
                    s.u.swap_rows(t, i);
                    disturbed = true;
                }
            }
            if (disturbed) continue;
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = div_round_nearest(d.at(t, j), d.at(t, t));
                d.add_col_multiple(j, t, -q);
                s.v.add_col_multiple(j, t, -q);
                if (d.at(t, j) != 0) {
                    d.swap_cols(t, j);
                    s.v.swap_cols(t, j);
                    disturbed = true;
                }
            }
            if (disturbed) continue;

            // Pivot must divide every remaining entry for the divisibility
            // chain; fold a bad row in and reduce again.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < m && divides_all; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.add_row_multiple(t, i, 1);
                        s.u.add_row_multiple(t, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }

        if (d.at(t, t) < 0) {
            d.negate_row(t);
            s.u.negate_row(t);
        }
    }
    return s;
}

}  // namespace reebcert
