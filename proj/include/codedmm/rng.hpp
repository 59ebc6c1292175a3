#ifndef CODEDMM_RNG_HPP
#define CODEDMM_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace codedmm {

/// splitmix64 finalizer. Used both as the generator step and to derive
/// independent stream seeds from (master_seed, index) pairs.
inline std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Small self-contained counter-based generator (splitmix64). The sequence
/// depends only on the seed, not on the platform or standard library, so
/// every draw in the project is reproducible bit-for-bit.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; one spare value is cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform01(); // (0, 1], keeps log finite
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Independent stream for (master_seed, a, b), e.g. a = experiment cell,
/// b = trial index. Streams never share state, so trials can run in
/// parallel without coupling results to the schedule.
inline Rng derive_stream(std::uint64_t master_seed, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t x = master_seed;
    x = mix64(x ^ (0x9E3779B97F4A7C15ULL * (a + 1)));
    x = mix64(x ^ (0xBF58476D1CE4E5B9ULL * (b + 1)));
    return Rng(x);
}

} // namespace codedmm

#endif // CODEDMM_RNG_HPP
