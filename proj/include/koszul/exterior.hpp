// Exterior-power basis combinatorics and wedge-multiplication matrices.
//
// Conventions, used consistently everywhere:
//   * the ground set [n] = {1, ..., n} is 1-based;
//   * a basis of the r-th exterior power is indexed by the r-subsets of [n],
//     written as strictly increasing lists and ordered lexicographically;
//   * matrices of maps between exterior powers use those bases for rows
//     (target) and columns (source), with 0-based row/column indices.
//
// For m = 2p+1 a KoszulContext caches the p- and (p+1)-subset tables of [m];
// both have size D = C(m, p) since C(2p+1, p) = C(2p+1, p+1).

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "koszul/matrix.hpp"

namespace koszul {

/// C(n, k) in 64 bits; throws std::overflow_error if the value does not fit.
std::uint64_t binomial(unsigned n, unsigned k);

/// A subset of [n]: strictly increasing 1-based elements.
using Subset = std::vector<int>;

/// Position of I among the r-subsets of [n] in lex order, 0-based.
/// Throws std::invalid_argument on a malformed subset.
std::size_t subset_rank(int n, int r, const Subset& subset);

/// Inverse of subset_rank; throws std::out_of_range for index >= C(n,r).
Subset subset_unrank(int n, int r, std::size_t index);

/// Sign s with e_i ^ e_I = s * e_{I u {i}} (sorted); 0 iff i is in I.
int wedge_sign(int i, const Subset& subset);

/// Basis obtained from the standard one by scaling vector `index` by lambda.
struct ScaledBasis {
    int n = 0;
    int index = 0;   // 1-based
    Scalar lambda;   // must be nonzero
};

class KoszulContext {
public:
    /// Builds the subset tables for m = 2p+1.
    explicit KoszulContext(int p);

    int p() const { return p_; }
    int m() const { return m_; }

    /// D = C(m, p) = C(m, p+1), the dimension of both exterior powers.
    std::size_t dim() const { return dim_; }

    /// C(2p, p), the rank of every nonzero wedge-multiplication matrix.
    std::size_t generic_rank() const { return generic_rank_; }

    const std::vector<Subset>& p_subsets() const { return p_subsets_; }
    const std::vector<Subset>& p1_subsets() const { return p1_subsets_; }

    std::size_t p_index(const Subset& subset) const;
    std::size_t p1_index(const Subset& subset) const;

private:
    int p_;
    int m_;
    std::size_t dim_;
    std::size_t generic_rank_;
    std::vector<Subset> p_subsets_;
    std::vector<Subset> p1_subsets_;
    std::map<Subset, std::size_t> p_rank_;
    std::map<Subset, std::size_t> p1_rank_;
};

/// D x D matrix of w -> v ^ w from the p-th to the (p+1)-th exterior power,
/// in the lex subset bases. Requires |v| = m.
ExactMatrix wedge_matrix(const KoszulContext& ctx, const std::vector<Scalar>& v);

/// wedge_matrix of the standard basis vector e_i (1-based).
ExactMatrix wedge_matrix_unit(const KoszulContext& ctx, const FieldSpec& field, int i);

/// The diagonal base-change matrix on the r-th exterior power induced by
/// scaling one basis vector: entry lambda at every subset containing the
/// scaled index, 1 elsewhere. Its determinant is lambda^C(n-1, r-1).
ExactMatrix scaled_basis_change(int n, int r, const ScaledBasis& basis);

}  // namespace koszul
