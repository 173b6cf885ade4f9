// Dense matrices of exact field elements.
//
// Rank and determinant are exact: fraction-free Bareiss elimination on a
// denominator-cleared integer copy over Q, ordinary Gaussian elimination
// over GF(p). Results are independent of pivot order.

#pragma once

#include <cstddef>
#include <vector>

#include "koszul/field.hpp"

namespace koszul {

class ExactMatrix {
public:
    /// Zero-filled rows x cols matrix. Zero-sized matrices are allowed.
    ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols);

    static ExactMatrix identity(const FieldSpec& field, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    /// Element access, 0-based.
    Scalar at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Scalar& value);
    void set(std::size_t r, std::size_t c, std::int64_t value);
    void add_at(std::size_t r, std::size_t c, const Scalar& value);

    ExactMatrix operator+(const ExactMatrix& rhs) const;
    ExactMatrix operator-(const ExactMatrix& rhs) const;
    ExactMatrix operator*(const ExactMatrix& rhs) const;
    ExactMatrix scaled(const Scalar& factor) const;

    bool operator==(const ExactMatrix& rhs) const;
    bool operator!=(const ExactMatrix& rhs) const { return !(*this == rhs); }
    bool is_zero() const;

    std::size_t rank() const;

    /// Exact determinant; throws std::invalid_argument on non-square input.
    Scalar det() const;

    std::string to_string() const;

private:
    void require_same_shape(const ExactMatrix& rhs) const;
    void require_same_field(const ExactMatrix& rhs) const;
    void check_index(std::size_t r, std::size_t c) const;

    std::size_t rows_;
    std::size_t cols_;
    FieldSpec field_;
    std::vector<mpq_class> qdata_;        // row-major, used iff rationals
    std::vector<std::uint32_t> pdata_;    // row-major, used iff prime

    friend ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);
};

/// Kronecker product: block matrix with (i,j) block a_ij * B.
ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);

/// Block-diagonal sum; rank(a + b) = rank(a) + rank(b).
ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace koszul
