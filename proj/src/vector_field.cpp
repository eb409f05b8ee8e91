#include "crmin/vector_field.hpp"

#include <algorithm>

#include "crmin/errors.hpp"

namespace crmin {

VectorField::VectorField(VariableFrame frame, std::vector<TruncatedSeries> components)
    : frame_(std::move(frame)), components_(std::move(components)), precision_(0) {
    if (components_.size() != frame_.arity())
        throw ValidationError("vector field needs one component per coordinate of " +
                              frame_.describe());
    precision_ = components_.front().precision();
    for (const auto& c : components_) {
        if (c.frame() != frame_)
            throw FrameMismatchError("vector field component in frame " + c.frame().describe() +
                                     ", expected " + frame_.describe());
        precision_ = std::min(precision_, c.precision());
    }
}

VectorField VectorField::zero(const VariableFrame& frame, int precision) {
    std::vector<TruncatedSeries> comps(frame.arity(), TruncatedSeries(frame, precision));
    return VectorField(frame, std::move(comps));
}

bool VectorField::is_zero() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const TruncatedSeries& c) { return c.empty(); });
}

VectorField VectorField::operator+(const VectorField& o) const {
    if (frame_ != o.frame_)
        throw FrameMismatchError("vector field addition across frames");
    std::vector<TruncatedSeries> comps;
    comps.reserve(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i)
        comps.push_back(components_[i] + o.components_[i]);
    return VectorField(frame_, std::move(comps));
}

VectorField VectorField::operator-(const VectorField& o) const {
    if (frame_ != o.frame_)
        throw FrameMismatchError("vector field subtraction across frames");
    std::vector<TruncatedSeries> comps;
    comps.reserve(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i)
        comps.push_back(components_[i] - o.components_[i]);
    return VectorField(frame_, std::move(comps));
}

VectorField VectorField::operator*(const GaussianRational& c) const {
    std::vector<TruncatedSeries> comps;
    comps.reserve(components_.size());
    for (const auto& comp : components_) comps.push_back(comp * c);
    return VectorField(frame_, std::move(comps));
}

TruncatedSeries apply_field(const VectorField& X, const TruncatedSeries& p) {
    if (X.frame() != p.frame())
        throw FrameMismatchError("apply_field: field in " + X.frame().describe() +
                                 ", series in " + p.frame().describe());
    if (p.precision() <= 1)
        throw PrecisionUnderflowError("apply_field: series precision exhausted");
    int result_precision = std::min(X.precision(), p.precision() - 1);
    TruncatedSeries acc(p.frame(), result_precision);
    for (std::size_t i = 0; i < X.components().size(); ++i) {
        if (X.component(i).empty()) continue;
        acc = acc + X.component(i) * derivative(p, i);
    }
    // Zero components may not have touched the accumulator; pin the
    // documented precision either way.
    return acc.truncated(result_precision);
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
    if (X.frame() != Y.frame())
        throw FrameMismatchError("lie_bracket across frames");
    int result_precision = std::min(X.precision(), Y.precision()) - 1;
    if (result_precision < 1)
        throw PrecisionUnderflowError("lie_bracket: precision exhausted (bracket depth exceeds the order)");
    std::vector<TruncatedSeries> comps;
    comps.reserve(X.components().size());
    for (std::size_t i = 0; i < X.components().size(); ++i)
        comps.push_back(
            (apply_field(X, Y.component(i)) - apply_field(Y, X.component(i)))
                .truncated(result_precision));
    return VectorField(X.frame(), std::move(comps));
}

std::vector<GaussianRational> evaluate_at_origin(const VectorField& X) {
    std::vector<GaussianRational> v;
    v.reserve(X.components().size());
    for (const auto& c : X.components()) v.push_back(c.constant_term());
    return v;
}

std::vector<VectorField> build_L_fields(const ManifoldModel& model) {
    const VariableFrame full = model.full_frame();
    const VariableFrame intr = model.intrinsic_frame();
    const int prec = model.precision() - 1;
    if (prec < 1)
        throw PrecisionUnderflowError("build_L_fields: model order too small");
    std::vector<VectorField> fields;
    fields.reserve(model.m());
    for (int k = 0; k < model.m(); ++k) {
        std::vector<TruncatedSeries> comps;
        comps.reserve(intr.arity());
        for (std::size_t i = 0; i < intr.arity(); ++i) comps.emplace_back(intr, prec);
        comps[intr.z_offset() + k] =
            TruncatedSeries::constant(intr, GaussianRational(1), prec);
        for (int j = 0; j < model.d(); ++j) {
            TruncatedSeries coeff =
                model.restrict_to_M(derivative(model.theta_bar()[j], full.z_offset() + k));
            comps[intr.w_offset() + j] = coeff.truncated(prec);
        }
        fields.emplace_back(intr, std::move(comps));
    }
    return fields;
}

std::vector<VectorField> build_U_fields(const ManifoldModel& model) {
    const VariableFrame intr = model.intrinsic_frame();
    const int prec = model.precision();
    std::vector<VectorField> fields;
    fields.reserve(model.m());
    for (int k = 0; k < model.m(); ++k) {
        std::vector<TruncatedSeries> comps;
        comps.reserve(intr.arity());
        for (std::size_t i = 0; i < intr.arity(); ++i) comps.emplace_back(intr, prec);
        comps[intr.zeta_offset() + k] =
            TruncatedSeries::constant(intr, GaussianRational(1), prec);
        fields.emplace_back(intr, std::move(comps));
    }
    return fields;
}

TruncatedSeries wronskian(const TruncatedSeries& f, const TruncatedSeries& g,
                          const VectorField& X) {
    return f * apply_field(X, g) - g * apply_field(X, f);
}

} // namespace crmin
