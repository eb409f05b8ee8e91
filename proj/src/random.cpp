#include "crmin/random.hpp"

#include <algorithm>

namespace crmin {

Rational random_rational(SplitMix64& rng, long max_num, long max_den) {
    return make_rational(rng.range(-max_num, max_num), rng.range(1, max_den));
}

Rational random_nonzero_rational(SplitMix64& rng, long max_num, long max_den) {
    long num = rng.range(1, max_num);
    if (rng.below(2) == 1) num = -num;
    return make_rational(num, rng.range(1, max_den));
}

GaussianRational random_coefficient(SplitMix64& rng, long max_num, long max_den,
                                    bool allow_imaginary) {
    if (!allow_imaginary) return GaussianRational(random_nonzero_rational(rng, max_num, max_den));
    // real / imaginary / mixed, nonzero by construction
    switch (rng.below(3)) {
        case 0: return GaussianRational(random_nonzero_rational(rng, max_num, max_den));
        case 1: return {Rational(0), random_nonzero_rational(rng, max_num, max_den)};
        default:
            return {random_nonzero_rational(rng, max_num, max_den),
                    random_nonzero_rational(rng, max_num, max_den)};
    }
}

TruncatedSeries random_series(SplitMix64& rng, const VariableFrame& frame, int precision,
                              const SeriesSampler& opts) {
    std::uint32_t degree_cap =
        std::min<std::uint32_t>(opts.max_degree, static_cast<std::uint32_t>(precision - 1));
    auto exponents = enumerate_exponents(frame.arity(), degree_cap);
    std::vector<std::pair<Exponent, GaussianRational>> terms;
    for (const auto& e : exponents) {
        if (rng.below(100) >= opts.density_percent) continue;
        terms.emplace_back(e, random_coefficient(rng, opts.max_numerator, opts.max_denominator,
                                                 opts.complex_coefficients));
    }
    if (terms.empty()) {
        const auto& e = exponents[rng.below(exponents.size())];
        terms.emplace_back(e, random_coefficient(rng, opts.max_numerator, opts.max_denominator,
                                                 opts.complex_coefficients));
    }
    return TruncatedSeries::from_terms(frame, precision, std::move(terms));
}

} // namespace crmin
