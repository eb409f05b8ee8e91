#include "crmin/fuzz.hpp"

#include "crmin/constancy.hpp"
#include "crmin/random.hpp"

namespace crmin {

namespace {

// Is f exactly c*g (as truncated tables) for a real c? The defect of such a
// pair is legitimately empty; anything else with an empty defect on a
// finite-type model would contradict the constancy result.
bool proportional_with_real_ratio(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.empty() || g.empty()) return false;
    GaussianRational c = f.leading_term()->second / g.leading_term()->second;
    if (!c.is_real()) return false;
    return (f - g * c).empty();
}

} // namespace

FuzzResult run_fuzz(const ManifoldModel& model, const FuzzOptions& options) {
    FuzzResult result;
    SplitMix64 rng(options.seed);
    const VariableFrame t_frame = model.t_frame();
    const int depth = options.max_depth > 0 ? options.max_depth : model.precision() - 1;
    SeriesSampler sampler;
    sampler.max_degree = options.max_degree;

    for (int trial = 0; trial < options.trials; ++trial) {
        TruncatedSeries g = random_series(rng, t_frame, model.precision(), sampler);
        TruncatedSeries f(t_frame, model.precision());
        GaussianRational planted;
        if (options.proportional_mode) {
            planted = GaussianRational(random_nonzero_rational(rng, 9, 4));
            f = g * planted;
        } else {
            f = random_series(rng, t_frame, model.precision(), sampler);
        }

        ConstancyCertificate cert =
            verify_constancy(SeriesPair(f, g), model, depth);
        ++result.trials;
        switch (cert.outcome) {
            case CertificateOutcome::ConstantFound: ++result.constant_found; break;
            case CertificateOutcome::DefectNonzero: ++result.defect_nonzero; break;
            case CertificateOutcome::NotFiniteType: ++result.not_finite_type; break;
            case CertificateOutcome::InsufficientPrecision:
                ++result.insufficient_precision;
                break;
        }

        auto serialize = [&](const std::string& why) {
            return why + "; trial=" + std::to_string(trial) +
                   "; seed=" + std::to_string(options.seed) + "; f = " + to_string(f) +
                   "; g = " + to_string(g);
        };

        if (options.proportional_mode) {
            bool recovered = cert.outcome == CertificateOutcome::ConstantFound &&
                             cert.constant == planted;
            if (recovered)
                ++result.planted_recovered;
            else if (!result.falsification)
                result.falsification =
                    serialize("planted constant " + to_string(planted) + " not recovered");
            continue;
        }

        // The falsification property: an empty defect on a finite-type model
        // must mean the pair is proportional with a real ratio.
        if (cert.defect_empty && cert.outcome != CertificateOutcome::NotFiniteType &&
            !proportional_with_real_ratio(f, g) && !result.falsification) {
            result.falsification = serialize("empty defect for a non-proportional pair");
        }
    }
    return result;
}

} // namespace crmin
