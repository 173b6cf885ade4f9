#include "koszul/exterior.hpp"

#include <algorithm>

namespace koszul {

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        std::uint64_t num = n - k + i;
        // result * num / i is exact at every step; guard the product.
        if (result > UINT64_MAX / num) throw std::overflow_error("binomial: value exceeds 64 bits");
        result = result * num / i;
    }
    return result;
}

namespace {

void validate_subset(int n, int r, const Subset& subset) {
    if (static_cast<int>(subset.size()) != r) {
        throw std::invalid_argument("subset: expected " + std::to_string(r) + " elements, got " +
                                    std::to_string(subset.size()));
    }
    int prev = 0;
    for (int v : subset) {
        if (v <= prev || v > n) throw std::invalid_argument("subset: not strictly increasing in [n]");
        prev = v;
    }
}

}  // namespace

std::size_t subset_rank(int n, int r, const Subset& subset) {
    validate_subset(n, r, subset);
    std::size_t rank = 0;
    int prev = 0;
    for (int t = 0; t < r; ++t) {
        for (int v = prev + 1; v < subset[t]; ++v) {
            rank += binomial(static_cast<unsigned>(n - v), static_cast<unsigned>(r - t - 1));
        }
        prev = subset[t];
    }
    return rank;
}

Subset subset_unrank(int n, int r, std::size_t index) {
    if (index >= binomial(static_cast<unsigned>(n), static_cast<unsigned>(r))) {
        throw std::out_of_range("subset_unrank: index " + std::to_string(index) +
                                " out of range for C(" + std::to_string(n) + "," +
                                std::to_string(r) + ")");
    }
    Subset subset;
    subset.reserve(r);
    int v = 1;
    for (int t = 0; t < r; ++t) {
        while (true) {
            std::uint64_t block = binomial(static_cast<unsigned>(n - v), static_cast<unsigned>(r - t - 1));
            if (index < block) break;
            index -= block;
            ++v;
        }
        subset.push_back(v);
        ++v;
    }
    return subset;
}

int wedge_sign(int i, const Subset& subset) {
    int below = 0;
    for (int v : subset) {
        if (v == i) return 0;
        if (v < i) ++below;
    }
    return (below % 2 == 0) ? 1 : -1;
}

KoszulContext::KoszulContext(int p) : p_(p), m_(2 * p + 1) {
    if (p < 0) throw std::invalid_argument("KoszulContext: p must be nonnegative");
    dim_ = binomial(static_cast<unsigned>(m_), static_cast<unsigned>(p_));
    generic_rank_ = binomial(static_cast<unsigned>(2 * p_), static_cast<unsigned>(p_));
    p_subsets_.reserve(dim_);
    p1_subsets_.reserve(dim_);
    for (std::size_t k = 0; k < dim_; ++k) {
        p_subsets_.push_back(subset_unrank(m_, p_, k));
        p1_subsets_.push_back(subset_unrank(m_, p_ + 1, k));
        p_rank_[p_subsets_.back()] = k;
        p1_rank_[p1_subsets_.back()] = k;
    }
}

std::size_t KoszulContext::p_index(const Subset& subset) const {
    auto it = p_rank_.find(subset);
    if (it == p_rank_.end()) throw std::invalid_argument("KoszulContext: unknown p-subset");
    return it->second;
}

std::size_t KoszulContext::p1_index(const Subset& subset) const {
    auto it = p1_rank_.find(subset);
    if (it == p1_rank_.end()) throw std::invalid_argument("KoszulContext: unknown (p+1)-subset");
    return it->second;
}

ExactMatrix wedge_matrix(const KoszulContext& ctx, const std::vector<Scalar>& v) {
    if (static_cast<int>(v.size()) != ctx.m()) {
        throw std::invalid_argument("wedge_matrix: expected a vector of length m = " +
                                    std::to_string(ctx.m()));
    }
    const FieldSpec& field = v.front().field();
    for (const Scalar& s : v) {
        if (s.field() != field) throw std::invalid_argument("wedge_matrix: mixed fields in v");
    }
    ExactMatrix out(field, ctx.dim(), ctx.dim());
    for (std::size_t col = 0; col < ctx.dim(); ++col) {
        const Subset& subset = ctx.p_subsets()[col];
        for (int i = 1; i <= ctx.m(); ++i) {
            if (v[i - 1].is_zero()) continue;
            int sign = wedge_sign(i, subset);
            if (sign == 0) continue;
            Subset merged = subset;
            merged.insert(std::lower_bound(merged.begin(), merged.end(), i), i);
            std::size_t row = ctx.p1_index(merged);
            Scalar value = sign > 0 ? v[i - 1] : -v[i - 1];
            out.add_at(row, col, value);
        }
    }
    return out;
}

ExactMatrix wedge_matrix_unit(const KoszulContext& ctx, const FieldSpec& field, int i) {
    if (i < 1 || i > ctx.m()) throw std::invalid_argument("wedge_matrix_unit: index out of [m]");
    std::vector<Scalar> v(ctx.m(), Scalar::zero(field));
    v[i - 1] = Scalar::one(field);
    return wedge_matrix(ctx, v);
}

ExactMatrix scaled_basis_change(int n, int r, const ScaledBasis& basis) {
    if (basis.lambda.is_zero()) throw std::invalid_argument("scaled_basis_change: lambda must be nonzero");
    if (basis.index < 1 || basis.index > n) throw std::invalid_argument("scaled_basis_change: index out of [n]");
    if (basis.n != n) throw std::invalid_argument("scaled_basis_change: dimension mismatch");
    std::size_t dim = binomial(static_cast<unsigned>(n), static_cast<unsigned>(r));
    ExactMatrix out(basis.lambda.field(), dim, dim);
    for (std::size_t k = 0; k < dim; ++k) {
        Subset subset = subset_unrank(n, r, k);
        bool contains = std::binary_search(subset.begin(), subset.end(), basis.index);
        out.set(k, k, contains ? basis.lambda : Scalar::one(basis.lambda.field()));
    }
    return out;
}

}  // namespace koszul
