#include "koszul/tensor.hpp"

namespace koszul {

Tensor3::Tensor3(FieldSpec field, std::size_t a, std::size_t b, std::size_t c)
    : dims_{a, b, c}, field_(field) {}

void Tensor3::check_index(int i, int j, int k) const {
    if (i < 1 || j < 1 || k < 1 || static_cast<std::size_t>(i) > dims_[0] ||
        static_cast<std::size_t>(j) > dims_[1] || static_cast<std::size_t>(k) > dims_[2]) {
        throw std::out_of_range("Tensor3: index (" + std::to_string(i) + "," + std::to_string(j) +
                                "," + std::to_string(k) + ") out of range");
    }
}

void Tensor3::set(int i, int j, int k, const Scalar& value) {
    check_index(i, j, k);
    if (value.field() != field_) throw std::invalid_argument("Tensor3: field mismatch in set()");
    std::array<int, 3> key{i, j, k};
    if (value.is_zero()) {
        entries_.erase(key);
    } else {
        entries_[key] = value;
    }
}

void Tensor3::set(int i, int j, int k, std::int64_t value) {
    set(i, j, k, Scalar::from_int(field_, value));
}

void Tensor3::add_at(int i, int j, int k, const Scalar& value) {
    set(i, j, k, at(i, j, k) + value);
}

Scalar Tensor3::at(int i, int j, int k) const {
    check_index(i, j, k);
    auto it = entries_.find({i, j, k});
    return it == entries_.end() ? Scalar::zero(field_) : it->second;
}

ExactMatrix Tensor3::slice(int i) const {
    if (i < 1 || static_cast<std::size_t>(i) > dims_[0]) {
        throw std::out_of_range("Tensor3: slice index out of range");
    }
    ExactMatrix out(field_, dims_[1], dims_[2]);
    auto lo = entries_.lower_bound({i, 0, 0});
    auto hi = entries_.lower_bound({i + 1, 0, 0});
    for (auto it = lo; it != hi; ++it) {
        out.set(it->first[1] - 1, it->first[2] - 1, it->second);
    }
    return out;
}

Tensor3 Tensor3::operator+(const Tensor3& rhs) const {
    if (field_ != rhs.field_ || dims_ != rhs.dims_) {
        throw std::invalid_argument("Tensor3: shape or field mismatch in +");
    }
    Tensor3 out = *this;
    for (const auto& [key, value] : rhs.entries_) {
        out.add_at(key[0], key[1], key[2], value);
    }
    return out;
}

Tensor3 Tensor3::scaled(const Scalar& factor) const {
    Tensor3 out(field_, dims_[0], dims_[1], dims_[2]);
    for (const auto& [key, value] : entries_) {
        out.set(key[0], key[1], key[2], value * factor);
    }
    return out;
}

bool Tensor3::operator==(const Tensor3& rhs) const {
    return field_ == rhs.field_ && dims_ == rhs.dims_ && entries_ == rhs.entries_;
}

}  // namespace koszul
