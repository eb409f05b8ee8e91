#include "crmin/manifold.hpp"

#include <algorithm>

#include "crmin/errors.hpp"

namespace crmin {

namespace {

// Assignment realizing xi_j := theta_j with every other variable passing
// through, targeting the intrinsic frame.
std::vector<TruncatedSeries> restriction_assignment(const VariableFrame& full,
                                                    const VariableFrame& intrinsic,
                                                    const std::vector<TruncatedSeries>& theta_intr,
                                                    int precision) {
    std::vector<TruncatedSeries> assignment;
    assignment.reserve(full.arity());
    for (std::size_t i = 0; i < full.arity(); ++i) {
        if (i >= full.xi_offset()) {
            assignment.push_back(theta_intr[i - full.xi_offset()].truncated(
                std::min(precision, theta_intr[i - full.xi_offset()].precision())));
        } else if (precision >= 2) {
            auto idx = intrinsic.find_var(full.var_name(i));
            assignment.push_back(TruncatedSeries::variable(intrinsic, *idx, precision));
        } else {
            // precision 1 cannot carry a coordinate function; the source series
            // cannot use any variable either, so a zero placeholder is exact.
            assignment.push_back(TruncatedSeries(intrinsic, precision));
        }
    }
    return assignment;
}

} // namespace

TruncatedSeries ManifoldModel::restrict_to_M(const TruncatedSeries& p_full) const {
    if (p_full.frame() != full_frame())
        throw FrameMismatchError("restrict_to_M expects a FULL-frame series, got " +
                                 p_full.frame().describe());
    auto assignment = restriction_assignment(full_frame(), intrinsic_frame(), theta_intrinsic_,
                                             p_full.precision());
    return substitute(p_full, intrinsic_frame(), assignment);
}

ModelValidation validate_model(int m, int d, const std::vector<TruncatedSeries>& theta,
                               int precision) {
    ModelValidation v;
    v.ok = true;
    auto fail = [&](const std::string& name, const std::string& detail) {
        v.checks.push_back({name, false, detail});
        v.ok = false;
    };
    auto pass = [&](const std::string& name, const std::string& detail = "") {
        v.checks.push_back({name, true, detail});
    };

    if (m < 1 || d < 1) {
        fail("shape", "m and d must be >= 1");
        return v;
    }
    if (precision < 2) {
        fail("shape", "precision order must be >= 2");
        return v;
    }
    if (static_cast<int>(theta.size()) != d) {
        fail("shape", "expected " + std::to_string(d) + " defining series, got " +
                          std::to_string(theta.size()));
        return v;
    }
    VariableFrame full(FrameKind::Full, m, d);
    for (const auto& t : theta) {
        if (t.frame() != full) {
            fail("shape", "defining series must live in " + full.describe());
            return v;
        }
        if (t.precision() != precision) {
            fail("shape", "defining series precision " + std::to_string(t.precision()) +
                              " does not match the model order " + std::to_string(precision));
            return v;
        }
        for (const auto& [e, c] : t.coeffs()) {
            for (std::size_t i = full.xi_offset(); i < full.arity(); ++i) {
                if (e[i] > 0) {
                    fail("shape", "a defining series may not depend on " + full.var_name(i));
                    return v;
                }
            }
        }
    }
    pass("shape");

    // Origin lies on the manifold.
    bool origin_ok = true;
    for (int j = 0; j < d && origin_ok; ++j) {
        if (!theta[j].constant_term().is_zero()) {
            fail("origin", "theta_" + std::to_string(j + 1) + " does not vanish at 0");
            origin_ok = false;
        }
    }
    if (origin_ok) pass("origin");

    // w-linear part of theta_j must be exactly w_j, so the two defining
    // systems are formally equivalent.
    bool norm_ok = true;
    for (int j = 0; j < d && norm_ok; ++j) {
        for (int k = 0; k < d && norm_ok; ++k) {
            Exponent e(full.arity(), 0);
            e[full.w_offset() + k] = 1;
            GaussianRational want(j == k ? 1 : 0);
            if (theta[j].coefficient(e) != want) {
                fail("normalization",
                     "linear part of theta_" + std::to_string(j + 1) + " in " +
                         full.var_name(full.w_offset() + k) + " must be " + to_string(want));
                norm_ok = false;
            }
        }
    }
    if (norm_ok) pass("normalization");
    if (!v.ok) return v;

    ManifoldModel model;
    model.m_ = m;
    model.d_ = d;
    model.precision_ = precision;
    model.theta_ = theta;
    for (const auto& t : theta) model.theta_bar_.push_back(conjugate_swap(t));
    for (const auto& t : theta) model.theta_intrinsic_.push_back(reframe(t, model.intrinsic_frame()));

    // Involution: theta_bar_j(z, zeta, theta) == w_j mod N.
    bool inv_ok = true;
    for (int j = 0; j < d; ++j) {
        TruncatedSeries composed = model.restrict_to_M(model.theta_bar_[j]);
        TruncatedSeries w_j =
            TruncatedSeries::variable(model.intrinsic_frame(),
                                      model.intrinsic_frame().w_offset() + j, precision);
        TruncatedSeries residual = composed - w_j;
        if (!residual.empty()) {
            fail("involution",
                 monomial_string(model.intrinsic_frame(), residual.leading_term()->first));
            inv_ok = false;
            break;
        }
    }
    if (inv_ok) {
        pass("involution");
        auto grid = tangency_residuals(model);
        for (const auto& row : grid)
            for (const auto& r : row)
                if (!r.empty()) {
                    fail("tangency", monomial_string(r.frame(), r.leading_term()->first));
                    v.model = std::nullopt;
                    return v;
                }
        pass("tangency");
        v.model = std::move(model);
    }
    return v;
}

ManifoldModel new_manifold(int m, int d, std::vector<TruncatedSeries> theta, int precision) {
    ModelValidation v = validate_model(m, d, theta, precision);
    if (!v.ok) {
        for (const auto& c : v.checks)
            if (!c.pass)
                throw ValidationError("model rejected by the '" + c.name + "' check: " + c.detail,
                                      c.name == "involution" ? c.detail : "");
    }
    return *std::move(v.model);
}

std::vector<std::vector<TruncatedSeries>> tangency_residuals(const ManifoldModel& model) {
    const VariableFrame full = model.full_frame();
    std::vector<std::vector<TruncatedSeries>> grid;
    grid.reserve(model.m());
    for (int k = 0; k < model.m(); ++k) {
        std::vector<TruncatedSeries> row;
        row.reserve(model.d());
        std::size_t zeta_k = full.zeta_offset() + k;
        for (int l = 0; l < model.d(); ++l) {
            TruncatedSeries acc = derivative(model.theta_bar()[l], zeta_k);
            for (int j = 0; j < model.d(); ++j) {
                acc = acc + derivative(model.theta()[j], zeta_k) *
                                derivative(model.theta_bar()[l], full.xi_offset() + j);
            }
            row.push_back(model.restrict_to_M(acc));
        }
        grid.push_back(std::move(row));
    }
    return grid;
}

} // namespace crmin
