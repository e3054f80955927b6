#include "reebcert/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "reebcert/errors.hpp"

namespace reebcert {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw InputError("ragged matrix initializer");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != Int(i == j ? 1 : 0)) return false;
    return true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw InputError("matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Int& bkj = rhs.at(k, j);
                if (bkj != 0) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw InputError("matrix-vector shape mismatch");
    std::vector<Int> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
    return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Int& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j)
        if (at(source, j) != 0) at(target, j) += factor * at(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Int& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < rows_; ++i)
        if (at(i, source) != 0) at(i, target) += factor * at(i, source);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

Int det(const IntMatrix& a) {
    if (!a.is_square()) throw InputError("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;

    IntMatrix b = a;
    // Half-open nonzero span [lo, hi) per row; Bareiss updates only touch
    // the union of the two spans involved.
    std::vector<std::size_t> lo(n, n), hi(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (b.at(i, j) != 0) {
                if (lo[i] == n) lo[i] = j;
                hi[i] = j + 1;
            }

    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (b.at(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && b.at(r, k) == 0) ++r;
            if (r == n) return 0;
            b.swap_rows(k, r);
            std::swap(lo[k], lo[r]);
            std::swap(hi[k], hi[r]);
            sign = -sign;
        }
        const Int pivot = b.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Int mult = b.at(i, k);
            const std::size_t jlo = std::max(k + 1, std::min(lo[i], mult != 0 ? lo[k] : lo[i]));
            const std::size_t jhi = std::max(hi[i], mult != 0 ? hi[k] : hi[i]);
            for (std::size_t j = jlo; j < jhi; ++j) {
                Int v = b.at(i, j) * pivot;
                if (mult != 0 && b.at(k, j) != 0) v -= mult * b.at(k, j);
                b.at(i, j) = v / prev;  // exact by the Bareiss identity
            }
            b.at(i, k) = 0;
            lo[i] = n;
            hi[i] = 0;
            for (std::size_t j = jlo; j < jhi; ++j)
                if (b.at(i, j) != 0) {
                    if (lo[i] == n) lo[i] = j;
                    hi[i] = j + 1;
                }
        }
        prev = pivot;
    }
    return sign * b.at(n - 1, n - 1);
}

}  // namespace reebcert
