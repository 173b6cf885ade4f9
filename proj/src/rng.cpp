#include "koszul/rng.hpp"

namespace koszul {

std::uint64_t splitmix64(std::uint64_t state) {
    std::uint64_t z = state + 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

SampleRng::SampleRng(std::uint64_t seed) : state_(splitmix64(seed ^ 0x4b6f737a756cull)) {}

SampleRng SampleRng::for_trial(std::uint64_t seed, std::uint64_t trial) {
    return SampleRng(splitmix64(seed) ^ splitmix64(trial + 0x100000001ull));
}

std::uint64_t SampleRng::next() {
    state_ = splitmix64(state_);
    return state_;
}

std::uint64_t SampleRng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("SampleRng: bound must be positive");
    // Rejection sampling keeps the draw unbiased.
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
}

Scalar SampleRng::scalar(const FieldSpec& field, std::int64_t bound) {
    if (field.is_prime()) {
        return Scalar::from_int(field, static_cast<std::int64_t>(below(field.characteristic())));
    }
    if (bound < 1) throw std::invalid_argument("SampleRng: rational bound must be >= 1");
    std::uint64_t span = static_cast<std::uint64_t>(2 * bound + 1);
    return Scalar::from_int(field, static_cast<std::int64_t>(below(span)) - bound);
}

Scalar SampleRng::nonzero_scalar(const FieldSpec& field, std::int64_t bound) {
    if (field.is_prime()) {
        std::uint64_t p = field.characteristic();
        return Scalar::from_int(field, static_cast<std::int64_t>(1 + below(p - 1)));
    }
    Scalar s = scalar(field, bound);
    while (s.is_zero()) s = scalar(field, bound);
    return s;
}

std::vector<Scalar> SampleRng::vector(const FieldSpec& field, std::size_t length,
                                      bool nonzero_entries, std::int64_t bound) {
    std::vector<Scalar> out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        out.push_back(nonzero_entries ? nonzero_scalar(field, bound) : scalar(field, bound));
    }
    return out;
}

ExactMatrix SampleRng::matrix(const FieldSpec& field, std::size_t rows, std::size_t cols,
                              std::int64_t bound) {
    ExactMatrix out(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            out.set(r, c, scalar(field, bound));
        }
    }
    return out;
}

}  // namespace koszul
