#include "omflat/exact.hpp"

#include <utility>

#include "omflat/errors.hpp"

namespace omflat {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw InputError("empty rational literal");
    Rational value;
    if (value.set_str(s, 10) != 0) throw InputError("malformed rational '" + s + "'");
    if (value.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
    value.canonicalize();
    return value;
}

std::string format_rational(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns) {
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    RationalMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw InputError("columns have different lengths");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw InputError("rows have different lengths");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RationalVector RationalMatrix::column(std::size_t j) const {
    RationalVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

RationalVector RationalMatrix::row(std::size_t i) const {
    return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

std::vector<RationalVector> RationalMatrix::columns() const {
    std::vector<RationalVector> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (cols_ != other.rows_) throw InputError("matrix product dimension mismatch");
    RationalMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
        }
    return out;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
    if (cols_ != v.size()) throw InputError("matrix-vector dimension mismatch");
    RationalVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

RationalMatrix RationalMatrix::rref(std::vector<std::size_t>* pivots) const {
    RationalMatrix m = *this;
    if (pivots != nullptr) pivots->clear();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot = row;
        while (pivot < rows_ && m(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(pivot, j), m(row, j));
        const Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < cols_; ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row || m(i, col) == 0) continue;
            const Rational factor = m(i, col);
            for (std::size_t j = col; j < cols_; ++j) m(i, j) -= factor * m(row, j);
        }
        if (pivots != nullptr) pivots->push_back(col);
        ++row;
    }
    return m;
}

std::size_t RationalMatrix::rank() const {
    std::vector<std::size_t> pivots;
    rref(&pivots);
    return pivots.size();
}

Rational RationalMatrix::determinant() const {
    if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
    RationalMatrix m = *this;
    Rational det = 1;
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && m(pivot, col) == 0) ++pivot;
        if (pivot == rows_) return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m(pivot, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t i = col + 1; i < rows_; ++i) {
            if (m(i, col) == 0) continue;
            const Rational factor = m(i, col) / m(col, col);
            for (std::size_t j = col; j < cols_; ++j) m(i, j) -= factor * m(col, j);
        }
    }
    return det;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw InputError("inverse of a non-square matrix");
    const std::size_t n = rows_;
    RationalMatrix augmented(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) augmented(i, j) = (*this)(i, j);
        augmented(i, n + i) = 1;
    }
    std::vector<std::size_t> pivots;
    const RationalMatrix reduced = augmented.rref(&pivots);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = reduced(i, n + j);
    return inv;
}

Integer bareiss_determinant(std::vector<Integer> a, std::size_t k) {
    if (k == 0) return 1;
    Integer previous = 1;
    int sign = 1;
    for (std::size_t p = 0; p + 1 < k; ++p) {
        if (a[p * k + p] == 0) {
            std::size_t swap_row = p + 1;
            while (swap_row < k && a[swap_row * k + p] == 0) ++swap_row;
            if (swap_row == k) return 0;
            for (std::size_t j = 0; j < k; ++j) std::swap(a[p * k + j], a[swap_row * k + j]);
            sign = -sign;
        }
        for (std::size_t i = p + 1; i < k; ++i) {
            for (std::size_t j = p + 1; j < k; ++j) {
                Integer& entry = a[i * k + j];
                entry = entry * a[p * k + p] - a[i * k + p] * a[p * k + j];
                mpz_divexact(entry.get_mpz_t(), entry.get_mpz_t(), previous.get_mpz_t());
            }
        }
        previous = a[p * k + p];
    }
    Integer det = a[k * k - 1];
    if (sign < 0) det = -det;
    return det;
}

std::vector<Integer> clear_denominators(const RationalVector& v) {
    Integer scale = 1;
    for (const Rational& x : v) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> out;
    out.reserve(v.size());
    for (const Rational& x : v) out.push_back(x.get_num() * (scale / x.get_den()));
    return out;
}

Sign determinant_sign(const std::vector<const RationalVector*>& columns) {
    const std::size_t k = columns.size();
    std::vector<Integer> entries(k * k);
    for (std::size_t j = 0; j < k; ++j) {
        if (columns[j]->size() != k) throw InputError("determinant_sign expects square input");
        const std::vector<Integer> col = clear_denominators(*columns[j]);
        for (std::size_t i = 0; i < k; ++i) entries[i * k + j] = col[i];
    }
    return sign_of(sgn(bareiss_determinant(std::move(entries), k)));
}

}  // namespace omflat
