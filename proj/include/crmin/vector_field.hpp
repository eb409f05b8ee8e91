#ifndef CRMIN_VECTOR_FIELD_HPP
#define CRMIN_VECTOR_FIELD_HPP

#include <vector>

#include "crmin/manifold.hpp"
#include "crmin/series.hpp"

namespace crmin {

// Formal vector field sum_i c_i(x) d/dx_i in the intrinsic chart (z, w,
// zeta); components are series in that frame. Immutable.
class VectorField {
public:
    VectorField(VariableFrame frame, std::vector<TruncatedSeries> components);
    static VectorField zero(const VariableFrame& frame, int precision);

    const VariableFrame& frame() const { return frame_; }
    const std::vector<TruncatedSeries>& components() const { return components_; }
    const TruncatedSeries& component(std::size_t i) const { return components_[i]; }

    // Min over component precisions.
    int precision() const { return precision_; }
    bool is_zero() const;

    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    VectorField operator*(const GaussianRational& c) const;

    bool operator==(const VectorField& o) const {
        return frame_ == o.frame_ && components_ == o.components_;
    }

private:
    VariableFrame frame_;
    std::vector<TruncatedSeries> components_;
    int precision_;
};

// X(p) = sum_i c_i * dp/dx_i; result precision min(prec X, prec p - 1).
TruncatedSeries apply_field(const VectorField& X, const TruncatedSeries& p);

// [X,Y](p) = X(Y(p)) - Y(X(p)); components X(Y_i) - Y(X_i), one order of
// precision spent.
VectorField lie_bracket(const VectorField& X, const VectorField& Y);

// Constant terms of the components, as a tangent vector at 0.
std::vector<GaussianRational> evaluate_at_origin(const VectorField& X);

// The m tangent fields d/dz_k + sum_j (d theta_bar_j / d z_k)|_M d/dw_j at
// precision N-1.
std::vector<VectorField> build_L_fields(const ManifoldModel& model);

// In the intrinsic chart the conjugate family collapses to d/dzeta_k
// exactly, at full precision N.
std::vector<VectorField> build_U_fields(const ManifoldModel& model);

// f * X(g) - g * X(f).
TruncatedSeries wronskian(const TruncatedSeries& f, const TruncatedSeries& g,
                          const VectorField& X);

} // namespace crmin

#endif
