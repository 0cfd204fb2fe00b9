#pragma once

#include <cstdint>

namespace orbidouble {

/// splitmix64 stream. Used everywhere randomness is needed so that results
/// are reproducible bit-for-bit across platforms and standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n), n > 0. Rejection-free modulo is fine here:
    /// n is tiny compared to 2^64, the bias is far below anything observable.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

} // namespace orbidouble
