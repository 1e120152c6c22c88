#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "omflat/sign.hpp"

namespace omflat {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p/q" or "p"; the result is canonicalized.
Rational parse_rational(std::string_view text);
/// Always formats as "p/q" with q >= 1.
std::string format_rational(const Rational& value);

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    static RationalMatrix identity(std::size_t n);
    /// Matrix whose j-th column is columns[j]; all columns must share one length.
    static RationalMatrix from_columns(const std::vector<RationalVector>& columns);
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RationalVector column(std::size_t j) const;
    RationalVector row(std::size_t i) const;
    std::vector<RationalVector> columns() const;

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& other) const;
    RationalVector operator*(const RationalVector& v) const;
    bool operator==(const RationalMatrix& other) const = default;

    /// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
    RationalMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
    std::size_t rank() const;
    Rational determinant() const;
    /// Throws DomainError when singular.
    RationalMatrix inverse() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Determinant of a square integer matrix (row-major, size k*k) by fraction-free elimination.
Integer bareiss_determinant(std::vector<Integer> entries, std::size_t k);

/// Scales a rational vector by the positive lcm of its denominators.
std::vector<Integer> clear_denominators(const RationalVector& v);

/// Sign of det[v_1 ... v_k] for k column vectors of length k.
Sign determinant_sign(const std::vector<const RationalVector*>& columns);

}  // namespace omflat
