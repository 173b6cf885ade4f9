// Koszul flattenings and border-rank lower-bound certificates.
//
// For a tensor T in K^m x K^b x K^c with m = 2p+1, the flattening sends
// sum_i e_i (x) X_i to sum_i L_i (x) X_i, where L_i is the wedge matrix of
// e_i. Its rank divided by C(2p, p) (rounded up) bounds border rank from
// below. Odd side dimension uses the flattening directly; even dimension d
// first projects the tensor to d-1 coordinates.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "koszul/exterior.hpp"
#include "koszul/tensor.hpp"

namespace koszul {

/// The 2p+1 Toeplitz matrices of size (p+1) x (p+1): the r-th has ones
/// exactly on the diagonal { (j, k) : k - j = p + 1 - r } (1-based).
std::vector<ExactMatrix> toeplitz_basis(const FieldSpec& field, int p);

/// Machine-checkable outcome of a lower-bound run.
struct RankCertificate {
    std::string label;
    FieldSpec field = FieldSpec::rationals();
    int m = 0;
    int p = 0;
    std::size_t flattening_rank = 0;
    std::size_t subspace_rank = 0;  // C(2p, p)
    std::size_t lower_bound = 0;    // ceil(flattening_rank / subspace_rank)
    std::string projection;         // even pipeline only

    /// The defining ceiling inequality between rank and bound.
    bool consistent() const;
};

/// The flattening matrix of T; requires T.dims()[0] == ctx.m().
/// Size (D*b) x (D*c) with D = ctx.dim().
ExactMatrix phi(const KoszulContext& ctx, const Tensor3& tensor);

/// Certificate for a cubic tensor of odd side d >= 3 (m = d).
RankCertificate lower_bound_odd(const Tensor3& tensor, std::string label = "");

/// Certificate for a cubic tensor of even side d >= 4 (m = d-1). Applies the
/// drop-last-coordinate projection plus `extra_projections` random
/// surjections K^d -> K^{d-1} and keeps the best certificate; any choice
/// of projection gives a sound bound.
RankCertificate lower_bound_even(const Tensor3& tensor, std::size_t extra_projections,
                                 std::uint64_t seed, std::string label = "");

/// Dispatches on the parity of the side length.
RankCertificate lower_bound(const Tensor3& tensor, std::size_t extra_projections,
                            std::uint64_t seed, std::string label = "");

/// sum_i L_i (x) coeffs[i], an element of the (n,n) blow-up of the wedge
/// space; coeffs must be m square matrices of equal size over one field.
ExactMatrix blowup_element(const KoszulContext& ctx, const std::vector<ExactMatrix>& coeffs);

/// Blow-up element with coefficients t_i * S_i (the Toeplitz basis);
/// requires |t| = m.
ExactMatrix toeplitz_blowup(const KoszulContext& ctx, const std::vector<Scalar>& t);

struct BlowupCheck {
    bool invertible = false;
    Scalar determinant;
    std::size_t size = 0;
};

/// Checks invertibility of the blow-up element with doubled Toeplitz
/// coefficients S_i (+) S_i, an element of the (m+1, m+1) blow-up.
BlowupCheck full_blowup_check(const KoszulContext& ctx, const FieldSpec& field);

struct WitnessResult {
    std::size_t best_rank = 0;
    std::size_t best_trial = 0;
    std::vector<ExactMatrix> best_coeffs;
    std::size_t trials = 0;
    std::size_t matrix_size = 0;
};

/// Randomized search for high-rank elements of the (n,n) blow-up. Every
/// found rank R is a witness that the blow-up rank is >= R. Trials draw
/// coefficients deterministically from (seed, trial index); an optional
/// first-trial override replaces trial 0.
WitnessResult witness_search(const KoszulContext& ctx, const FieldSpec& field, std::size_t n,
                             std::size_t trials, std::uint64_t seed,
                             const std::vector<ExactMatrix>* first_trial = nullptr,
                             std::int64_t rational_bound = 10);

}  // namespace koszul
