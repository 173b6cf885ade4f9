#include "koszul/flattening.hpp"

#include <algorithm>

#include "koszul/rng.hpp"

namespace koszul {

std::vector<ExactMatrix> toeplitz_basis(const FieldSpec& field, int p) {
    if (p < 0) throw std::invalid_argument("toeplitz_basis: p must be nonnegative");
    std::vector<ExactMatrix> basis;
    basis.reserve(2 * p + 1);
    for (int r = 1; r <= 2 * p + 1; ++r) {
        ExactMatrix s(field, p + 1, p + 1);
        for (int j = 1; j <= p + 1; ++j) {
            int k = j + p + 1 - r;
            if (k >= 1 && k <= p + 1) s.set(j - 1, k - 1, 1);
        }
        basis.push_back(std::move(s));
    }
    return basis;
}

bool RankCertificate::consistent() const {
    if (subspace_rank == 0) return false;
    return lower_bound * subspace_rank >= flattening_rank &&
           (lower_bound == 0 ? flattening_rank == 0
                             : flattening_rank > (lower_bound - 1) * subspace_rank);
}

ExactMatrix phi(const KoszulContext& ctx, const Tensor3& tensor) {
    if (tensor.dims()[0] != static_cast<std::size_t>(ctx.m())) {
        throw std::invalid_argument("phi: first tensor dimension must equal m = " +
                                    std::to_string(ctx.m()));
    }
    const std::size_t b = tensor.dims()[1];
    const std::size_t c = tensor.dims()[2];
    ExactMatrix out(tensor.field(), ctx.dim() * b, ctx.dim() * c);
    for (const auto& [key, value] : tensor.entries()) {
        const int i = key[0];
        for (std::size_t col = 0; col < ctx.dim(); ++col) {
            const Subset& subset = ctx.p_subsets()[col];
            int sign = wedge_sign(i, subset);
            if (sign == 0) continue;
            Subset merged = subset;
            merged.insert(std::lower_bound(merged.begin(), merged.end(), i), i);
            std::size_t row = ctx.p1_index(merged);
            Scalar signed_value = sign > 0 ? value : -value;
            out.add_at(row * b + (key[1] - 1), col * c + (key[2] - 1), signed_value);
        }
    }
    return out;
}

namespace {

RankCertificate certify(const KoszulContext& ctx, const Tensor3& tensor, std::string label,
                        std::string projection) {
    RankCertificate cert;
    cert.label = std::move(label);
    cert.field = tensor.field();
    cert.m = ctx.m();
    cert.p = ctx.p();
    cert.subspace_rank = ctx.generic_rank();
    cert.flattening_rank = phi(ctx, tensor).rank();
    cert.lower_bound = (cert.flattening_rank + cert.subspace_rank - 1) / cert.subspace_rank;
    cert.projection = std::move(projection);
    return cert;
}

// Applies pi (x) id (x) id for a (d-1) x d projection matrix pi.
Tensor3 project_first_factor(const Tensor3& tensor, const ExactMatrix& pi) {
    Tensor3 out(tensor.field(), pi.rows(), tensor.dims()[1], tensor.dims()[2]);
    for (const auto& [key, value] : tensor.entries()) {
        for (std::size_t r = 0; r < pi.rows(); ++r) {
            Scalar weight = pi.at(r, key[0] - 1);
            if (weight.is_zero()) continue;
            out.add_at(static_cast<int>(r) + 1, key[1], key[2], weight * value);
        }
    }
    return out;
}

ExactMatrix random_surjection(SampleRng& rng, const FieldSpec& field, std::size_t target,
                              std::size_t source, std::int64_t bound) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        ExactMatrix pi = rng.matrix(field, target, source, bound);
        if (pi.rank() == target) return pi;
    }
    throw std::runtime_error("random_surjection: failed to sample a full-rank map");
}

}  // namespace

RankCertificate lower_bound_odd(const Tensor3& tensor, std::string label) {
    if (!tensor.is_cubic()) throw std::invalid_argument("lower_bound_odd: tensor must be cubic");
    const std::size_t d = tensor.dims()[0];
    if (d % 2 == 0) throw std::invalid_argument("lower_bound_odd: side is even, use lower_bound_even");
    if (d < 3) throw std::invalid_argument("lower_bound_odd: side must be at least 3");
    KoszulContext ctx(static_cast<int>((d - 1) / 2));
    return certify(ctx, tensor, std::move(label), "");
}

RankCertificate lower_bound_even(const Tensor3& tensor, std::size_t extra_projections,
                                 std::uint64_t seed, std::string label) {
    if (!tensor.is_cubic()) throw std::invalid_argument("lower_bound_even: tensor must be cubic");
    const std::size_t d = tensor.dims()[0];
    if (d % 2 != 0) throw std::invalid_argument("lower_bound_even: side is odd, use lower_bound_odd");
    if (d < 4) throw std::invalid_argument("lower_bound_even: side must be at least 4");
    KoszulContext ctx(static_cast<int>((d - 2) / 2));

    // Default projection: drop the last coordinate of the first factor.
    ExactMatrix drop_last(tensor.field(), d - 1, d);
    for (std::size_t r = 0; r < d - 1; ++r) drop_last.set(r, r, 1);
    RankCertificate best = certify(ctx, project_first_factor(tensor, drop_last), label, "drop-last");

    SampleRng rng(seed);
    for (std::size_t k = 0; k < extra_projections; ++k) {
        ExactMatrix pi = random_surjection(rng, tensor.field(), d - 1, d, 10);
        RankCertificate cert =
            certify(ctx, project_first_factor(tensor, pi), label, "random#" + std::to_string(k + 1));
        if (cert.lower_bound > best.lower_bound) best = cert;
    }
    return best;
}

RankCertificate lower_bound(const Tensor3& tensor, std::size_t extra_projections,
                            std::uint64_t seed, std::string label) {
    if (!tensor.is_cubic()) throw std::invalid_argument("lower_bound: tensor must be cubic");
    return tensor.dims()[0] % 2 == 1
               ? lower_bound_odd(tensor, std::move(label))
               : lower_bound_even(tensor, extra_projections, seed, std::move(label));
}

ExactMatrix blowup_element(const KoszulContext& ctx, const std::vector<ExactMatrix>& coeffs) {
    if (coeffs.size() != static_cast<std::size_t>(ctx.m())) {
        throw std::invalid_argument("blowup_element: expected m = " + std::to_string(ctx.m()) +
                                    " coefficient matrices");
    }
    const FieldSpec& field = coeffs.front().field();
    const std::size_t n = coeffs.front().rows();
    for (const ExactMatrix& coeff : coeffs) {
        if (coeff.rows() != n || coeff.cols() != n || coeff.field() != field) {
            throw std::invalid_argument("blowup_element: coefficients must be equal-size square "
                                        "matrices over one field");
        }
    }
    ExactMatrix out(field, ctx.dim() * n, ctx.dim() * n);
    for (std::size_t col = 0; col < ctx.dim(); ++col) {
        const Subset& subset = ctx.p_subsets()[col];
        for (int i = 1; i <= ctx.m(); ++i) {
            int sign = wedge_sign(i, subset);
            if (sign == 0) continue;
            Subset merged = subset;
            merged.insert(std::lower_bound(merged.begin(), merged.end(), i), i);
            std::size_t row = ctx.p1_index(merged);
            const ExactMatrix& coeff = coeffs[i - 1];
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < n; ++c) {
                    Scalar value = coeff.at(r, c);
                    if (value.is_zero()) continue;
                    out.add_at(row * n + r, col * n + c, sign > 0 ? value : -value);
                }
            }
        }
    }
    return out;
}

ExactMatrix toeplitz_blowup(const KoszulContext& ctx, const std::vector<Scalar>& t) {
    if (t.size() != static_cast<std::size_t>(ctx.m())) {
        throw std::invalid_argument("toeplitz_blowup: expected |t| = m");
    }
    std::vector<ExactMatrix> coeffs = toeplitz_basis(t.front().field(), ctx.p());
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = coeffs[i].scaled(t[i]);
    return blowup_element(ctx, coeffs);
}

BlowupCheck full_blowup_check(const KoszulContext& ctx, const FieldSpec& field) {
    std::vector<ExactMatrix> coeffs = toeplitz_basis(field, ctx.p());
    for (ExactMatrix& coeff : coeffs) coeff = direct_sum(coeff, coeff);
    ExactMatrix element = blowup_element(ctx, coeffs);
    BlowupCheck check;
    check.size = element.rows();
    check.determinant = element.det();
    check.invertible = !check.determinant.is_zero();
    return check;
}

WitnessResult witness_search(const KoszulContext& ctx, const FieldSpec& field, std::size_t n,
                             std::size_t trials, std::uint64_t seed,
                             const std::vector<ExactMatrix>* first_trial,
                             std::int64_t rational_bound) {
    if (trials < 1) throw std::invalid_argument("witness_search: trials must be >= 1");
    if (n < 1) throw std::invalid_argument("witness_search: n must be >= 1");
    WitnessResult result;
    result.trials = trials;
    result.matrix_size = ctx.dim() * n;
    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::vector<ExactMatrix> coeffs;
        if (trial == 0 && first_trial != nullptr) {
            coeffs = *first_trial;
        } else {
            SampleRng rng = SampleRng::for_trial(seed, trial);
            coeffs.reserve(ctx.m());
            for (int i = 0; i < ctx.m(); ++i) {
                coeffs.push_back(rng.matrix(field, n, n, rational_bound));
            }
        }
        std::size_t rank = blowup_element(ctx, coeffs).rank();
        if (rank > result.best_rank || result.best_coeffs.empty()) {
            result.best_rank = rank;
            result.best_trial = trial;
            result.best_coeffs = coeffs;
        }
    }
    return result;
}

}  // namespace koszul
