// Deterministic seeded sampling. Draws come from our own bounded-uniform
// code on top of a fixed 64-bit generator, so identical seeds reproduce
// identical samples on every platform. Trial streams are derived from
// (seed, trial index), never from call order across trials.

#pragma once

#include <cstdint>
#include <vector>

#include "koszul/matrix.hpp"

namespace koszul {

std::uint64_t splitmix64(std::uint64_t state);

class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed);

    /// Independent stream for one trial of a multi-trial search.
    static SampleRng for_trial(std::uint64_t seed, std::uint64_t trial);

    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);

    /// Over GF(p): uniform residue. Over Q: uniform integer in [-bound, bound].
    Scalar scalar(const FieldSpec& field, std::int64_t bound = 10);
    Scalar nonzero_scalar(const FieldSpec& field, std::int64_t bound = 10);

    std::vector<Scalar> vector(const FieldSpec& field, std::size_t length, bool nonzero_entries,
                               std::int64_t bound = 10);
    ExactMatrix matrix(const FieldSpec& field, std::size_t rows, std::size_t cols,
                       std::int64_t bound = 10);

private:
    std::uint64_t next();
    std::uint64_t state_;
};

}  // namespace koszul
