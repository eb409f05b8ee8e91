#ifndef CRMIN_RANDOM_HPP
#define CRMIN_RANDOM_HPP

#include <cstdint>

#include "crmin/series.hpp"

namespace crmin {

// SplitMix64: the fixed, portable generator behind every seeded feature
// (fuzz trials, oracle points, test data). Identical seeds give identical
// streams on every platform, so reports built from it are reproducible
// byte for byte.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform-enough value in [0, n) by reduction; n is tiny everywhere we
    // sample, so the modulo bias is irrelevant and portability wins.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Inclusive range.
    long range(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

// Rational with numerator in [-max_num, max_num] and denominator in
// [1, max_den].
Rational random_rational(SplitMix64& rng, long max_num, long max_den);
Rational random_nonzero_rational(SplitMix64& rng, long max_num, long max_den);
GaussianRational random_coefficient(SplitMix64& rng, long max_num, long max_den,
                                    bool allow_imaginary);

struct SeriesSampler {
    std::uint32_t max_degree = 3;
    long max_numerator = 3;
    long max_denominator = 2;
    bool complex_coefficients = true;
    unsigned density_percent = 40; // chance each monomial of degree <= max_degree appears
};

// Never returns the zero table: when the density roll leaves nothing, one
// random monomial is forced in.
TruncatedSeries random_series(SplitMix64& rng, const VariableFrame& frame, int precision,
                              const SeriesSampler& opts);

} // namespace crmin

#endif
