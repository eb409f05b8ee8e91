#ifndef CRMIN_MANIFOLD_HPP
#define CRMIN_MANIFOLD_HPP

#include <optional>
#include <string>
#include <vector>

#include "crmin/series.hpp"

namespace crmin {

struct ModelValidation;

// Complexified generic submanifold through the origin, carried by the d
// defining series theta_j (functions of zeta, z, w stored in the FULL frame)
// with xi_j = theta_j on the manifold. theta_bar is always derived from
// theta by the bar operator, and the reality of the underlying manifold is
// enforced by the involution identity
//
//   w_j == theta_bar_j(z, zeta, theta(zeta, z, w))   mod N
//
// which construction verifies rather than trusts.
class ManifoldModel {
public:
    int m() const { return m_; }
    int d() const { return d_; }
    int precision() const { return precision_; }

    VariableFrame full_frame() const { return {FrameKind::Full, m_, d_}; }
    VariableFrame intrinsic_frame() const { return {FrameKind::Intrinsic, m_, d_}; }
    VariableFrame t_frame() const { return {FrameKind::T, m_, d_}; }
    VariableFrame tau_frame() const { return {FrameKind::Tau, m_, d_}; }

    const std::vector<TruncatedSeries>& theta() const { return theta_; }
    const std::vector<TruncatedSeries>& theta_bar() const { return theta_bar_; }
    // theta re-expressed in the intrinsic frame (it never uses xi).
    const std::vector<TruncatedSeries>& theta_intrinsic() const { return theta_intrinsic_; }

    // Substitutes xi_j := theta_j and moves to the intrinsic chart (z, w, zeta).
    // Result precision is min(prec p, N).
    TruncatedSeries restrict_to_M(const TruncatedSeries& p_full) const;

    friend ManifoldModel new_manifold(int m, int d, std::vector<TruncatedSeries> theta,
                                      int precision);
    friend ModelValidation validate_model(int m, int d, const std::vector<TruncatedSeries>& theta,
                                          int precision);

private:
    ManifoldModel() = default;
    int m_ = 0, d_ = 0, precision_ = 0;
    std::vector<TruncatedSeries> theta_, theta_bar_, theta_intrinsic_;
};

// One named validation step of model construction.
struct ModelCheck {
    std::string name;  // "origin", "normalization", "involution", "tangency"
    bool pass;
    std::string detail; // witness monomial or explanatory note, may be empty
};

struct ModelValidation {
    bool ok;
    std::vector<ModelCheck> checks;
    std::optional<ManifoldModel> model; // present when ok
};

// Runs every construction check and reports them individually (the CLI
// `check` command shows this list). theta_j must be FULL-frame series at
// the given precision using only the zeta/z/w variables.
ModelValidation validate_model(int m, int d, const std::vector<TruncatedSeries>& theta,
                               int precision);

// Validating constructor: throws ValidationError naming the first failed
// check (with its witness monomial) instead of returning a report.
ManifoldModel new_manifold(int m, int d, std::vector<TruncatedSeries> theta, int precision);

// Residual of the tangency identity for generator pair (zeta_k, defining
// equation l): d(theta_bar_l)/d(zeta_k) + sum_j d(theta_j)/d(zeta_k) *
// d(theta_bar_l)/d(xi_j), restricted to the manifold. All residuals are
// empty (mod N-1) exactly when the involution identity holds.
std::vector<std::vector<TruncatedSeries>> tangency_residuals(const ManifoldModel& model);

} // namespace crmin

#endif
