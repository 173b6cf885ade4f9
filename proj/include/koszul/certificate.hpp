// Invertibility certificate for the Toeplitz blow-up element.
//
// Write A(t) = sum_i t_i L_i (x) S_i as a D x D grid of (p+1) x (p+1)
// blocks, D = C(2p+1, p). Each nonzero block is (sign) t_i S_i, one per
// pair (i, I) with I a p-subset avoiding i: the block sits at block row
// I u {i} and block column I. Within such a block, a single inner entry
// survives every determinant-monomial-achieving choice; collecting it from
// every block yields a permutation sigma whose signed product is the
// coefficient k in det A(t) = k (t_1 ... t_m)^C(2p,p), and |k| = 1.
//
// Inner positions follow the Toeplitz convention S_i(j, k) = 1 iff
// k - j = p + 1 - i with 1-based j, k: the surviving entry of a block with
// x earlier-variable neighbours in its block row and y in its block column
// is at (x + 1, p + 1 - y).

#pragma once

#include <cstdint>
#include <vector>

#include "koszul/exterior.hpp"
#include "koszul/flattening.hpp"

namespace koszul {

/// One nonzero block of the blow-up grid.
struct BlockEntry {
    int variable = 0;         // i in [m]
    Subset subset;            // I, a p-subset with i not in I
    std::size_t block_row = 0;  // index of I u {i} among (p+1)-subsets
    std::size_t block_col = 0;  // index of I among p-subsets
    int sign = 0;             // wedge sign of (i, I)
};

/// All nonzero blocks, ordered by (block_col, variable).
std::vector<BlockEntry> block_structure(const KoszulContext& ctx);

/// Inner position within a (p+1) x (p+1) block, 1-based.
struct InnerPosition {
    int row = 0;
    int col = 0;
};

/// The forced inner entry of `entry` given the whole block structure.
/// Throws std::logic_error if the x + y = i - 1 accounting fails.
InnerPosition elusive_position(const KoszulContext& ctx, const BlockEntry& entry,
                               const std::vector<BlockEntry>& structure);

struct ElusiveCertificate {
    int m = 0;
    int p = 0;

    struct Choice {
        BlockEntry block;
        InnerPosition inner;   // 1-based within the block
        std::size_t row = 0;   // global, 0-based
        std::size_t col = 0;   // global, 0-based
    };
    std::vector<Choice> choices;

    /// sigma as a row -> column map over all D*(p+1) positions.
    std::vector<std::size_t> permutation;

    /// sgn(sigma) times the product of block signs; always +1 or -1.
    int k = 0;
};

/// Assembles the forced positions, verifies they form a permutation, and
/// computes k. A row or column collision would falsify the construction
/// and throws std::logic_error.
ElusiveCertificate elusive_certificate(const KoszulContext& ctx);

struct SemiMainReport {
    bool pass = false;
    int k = 0;
    std::size_t matrix_size = 0;
    Scalar det_at_ones;
    bool det_at_ones_ok = false;

    struct Sample {
        std::vector<Scalar> t;
        Scalar determinant;
        Scalar expected;
        bool ok = false;
    };
    std::vector<Sample> samples;
};

/// Checks det A(1,...,1) = k and, for `samples` random nonzero t-vectors,
/// det A(t) = k * (prod t_i)^C(2p,p). Failures are reported, not masked.
SemiMainReport verify_semi_main(const KoszulContext& ctx, const FieldSpec& field,
                                std::size_t samples, std::uint64_t seed);

}  // namespace koszul
