#ifndef CRMIN_FUZZ_HPP
#define CRMIN_FUZZ_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "crmin/manifold.hpp"

namespace crmin {

struct FuzzOptions {
    int trials = 100;
    std::uint64_t seed = 1;
    std::uint32_t max_degree = 3;
    int max_depth = 0;              // 0 = order - 1
    bool proportional_mode = false; // plant f = c*g with real c and expect recovery
};

struct FuzzResult {
    int trials = 0;
    int constant_found = 0;
    int defect_nonzero = 0;
    int not_finite_type = 0;
    int insufficient_precision = 0;
    int planted_recovered = 0; // proportional mode only
    // A non-proportional pair with an empty defect on a finite-type model
    // (or a planted constant that failed to come back): serialized here for
    // reproduction; its existence fails the run.
    std::optional<std::string> falsification;
};

FuzzResult run_fuzz(const ManifoldModel& model, const FuzzOptions& options);

} // namespace crmin

#endif
