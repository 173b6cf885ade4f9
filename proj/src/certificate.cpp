#include "koszul/certificate.hpp"

#include <algorithm>

#include "koszul/rng.hpp"

namespace koszul {

std::vector<BlockEntry> block_structure(const KoszulContext& ctx) {
    std::vector<BlockEntry> structure;
    structure.reserve(static_cast<std::size_t>(ctx.m()) * ctx.generic_rank());
    for (std::size_t col = 0; col < ctx.dim(); ++col) {
        const Subset& subset = ctx.p_subsets()[col];
        for (int i = 1; i <= ctx.m(); ++i) {
            int sign = wedge_sign(i, subset);
            if (sign == 0) continue;
            Subset merged = subset;
            merged.insert(std::lower_bound(merged.begin(), merged.end(), i), i);
            BlockEntry entry;
            entry.variable = i;
            entry.subset = subset;
            entry.block_row = ctx.p1_index(merged);
            entry.block_col = col;
            entry.sign = sign;
            structure.push_back(std::move(entry));
        }
    }
    return structure;
}

InnerPosition elusive_position(const KoszulContext& ctx, const BlockEntry& entry,
                               const std::vector<BlockEntry>& structure) {
    int x = 0;
    int y = 0;
    for (const BlockEntry& other : structure) {
        if (other.variable >= entry.variable) continue;
        if (other.block_row == entry.block_row) ++x;
        if (other.block_col == entry.block_col) ++y;
    }
    if (x + y != entry.variable - 1) {
        throw std::logic_error("elusive_position: row/column accounting violates x + y = i - 1");
    }
    InnerPosition pos;
    pos.row = x + 1;
    pos.col = ctx.p() + 1 - y;
    // The chosen cell must lie on the nonzero diagonal of S_i.
    if (pos.col - pos.row != ctx.p() + 1 - entry.variable) {
        throw std::logic_error("elusive_position: chosen cell misses the Toeplitz diagonal");
    }
    return pos;
}

namespace {

int permutation_sign(const std::vector<std::size_t>& sigma) {
    std::vector<bool> seen(sigma.size(), false);
    std::size_t cycles = 0;
    for (std::size_t start = 0; start < sigma.size(); ++start) {
        if (seen[start]) continue;
        ++cycles;
        std::size_t at = start;
        while (!seen[at]) {
            seen[at] = true;
            at = sigma[at];
        }
    }
    return ((sigma.size() - cycles) % 2 == 0) ? 1 : -1;
}

}  // namespace

ElusiveCertificate elusive_certificate(const KoszulContext& ctx) {
    const std::size_t inner = static_cast<std::size_t>(ctx.p()) + 1;
    const std::size_t size = ctx.dim() * inner;

    ElusiveCertificate cert;
    cert.m = ctx.m();
    cert.p = ctx.p();

    std::vector<BlockEntry> structure = block_structure(ctx);
    cert.choices.reserve(structure.size());

    std::vector<std::size_t> sigma(size, size);
    std::vector<bool> column_used(size, false);
    int sign_product = 1;
    for (const BlockEntry& entry : structure) {
        ElusiveCertificate::Choice choice;
        choice.block = entry;
        choice.inner = elusive_position(ctx, entry, structure);
        choice.row = entry.block_row * inner + (choice.inner.row - 1);
        choice.col = entry.block_col * inner + (choice.inner.col - 1);
        if (sigma[choice.row] != size || column_used[choice.col]) {
            throw std::logic_error("elusive_certificate: chosen positions collide");
        }
        sigma[choice.row] = choice.col;
        column_used[choice.col] = true;
        sign_product *= entry.sign;
        cert.choices.push_back(std::move(choice));
    }
    if (cert.choices.size() != size ||
        std::find(sigma.begin(), sigma.end(), size) != sigma.end()) {
        throw std::logic_error("elusive_certificate: positions do not cover every row");
    }
    cert.permutation = std::move(sigma);
    cert.k = permutation_sign(cert.permutation) * sign_product;
    return cert;
}

SemiMainReport verify_semi_main(const KoszulContext& ctx, const FieldSpec& field,
                                std::size_t samples, std::uint64_t seed) {
    ElusiveCertificate cert = elusive_certificate(ctx);

    SemiMainReport report;
    report.k = cert.k;
    report.matrix_size = ctx.dim() * (ctx.p() + 1);

    const Scalar k_value = Scalar::from_int(field, cert.k);
    const Scalar one = Scalar::one(field);

    std::vector<Scalar> ones(ctx.m(), one);
    report.det_at_ones = toeplitz_blowup(ctx, ones).det();
    report.det_at_ones_ok = report.det_at_ones == k_value;

    // Over GF(2) the only nonzero value is 1, so every sample repeats
    // t = (1,...,1); sample it once and move on.
    std::size_t effective_samples = samples;
    if (field.is_prime() && field.characteristic() == 2) effective_samples = std::min<std::size_t>(samples, 1);

    const std::uint64_t exponent = ctx.generic_rank();
    bool all_ok = report.det_at_ones_ok;
    for (std::size_t s = 0; s < effective_samples; ++s) {
        SampleRng rng = SampleRng::for_trial(seed, s);
        SemiMainReport::Sample sample;
        sample.t = rng.vector(field, ctx.m(), /*nonzero_entries=*/true);
        sample.determinant = toeplitz_blowup(ctx, sample.t).det();
        Scalar product = one;
        for (const Scalar& ti : sample.t) product = product * ti;
        Scalar power = one;
        for (std::uint64_t e = 0; e < exponent; ++e) power = power * product;
        sample.expected = k_value * power;
        sample.ok = sample.determinant == sample.expected;
        all_ok = all_ok && sample.ok;
        report.samples.push_back(std::move(sample));
    }
    report.pass = all_ok;
    return report;
}

}  // namespace koszul
