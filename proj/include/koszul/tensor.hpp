// Sparse order-3 tensors with exact entries. Indices are 1-based.

#pragma once

#include <array>
#include <cstddef>
#include <map>

#include "koszul/matrix.hpp"

namespace koszul {

class Tensor3 {
public:
    Tensor3(FieldSpec field, std::size_t a, std::size_t b, std::size_t c);

    const std::array<std::size_t, 3>& dims() const { return dims_; }
    const FieldSpec& field() const { return field_; }
    bool is_cubic() const { return dims_[0] == dims_[1] && dims_[1] == dims_[2]; }

    /// Stores value at (i, j, k); a zero value erases the entry.
    void set(int i, int j, int k, const Scalar& value);
    void set(int i, int j, int k, std::int64_t value);
    void add_at(int i, int j, int k, const Scalar& value);

    /// Entry at (i, j, k); zero when absent.
    Scalar at(int i, int j, int k) const;

    std::size_t entry_count() const { return entries_.size(); }

    /// Entries keyed by (i, j, k) in lex order; no explicit zeros.
    const std::map<std::array<int, 3>, Scalar>& entries() const { return entries_; }

    /// The i-th slice along the first factor as a b x c matrix.
    ExactMatrix slice(int i) const;

    Tensor3 operator+(const Tensor3& rhs) const;
    Tensor3 scaled(const Scalar& factor) const;
    bool operator==(const Tensor3& rhs) const;

private:
    void check_index(int i, int j, int k) const;

    std::array<std::size_t, 3> dims_;
    FieldSpec field_;
    std::map<std::array<int, 3>, Scalar> entries_;
};

}  // namespace koszul
