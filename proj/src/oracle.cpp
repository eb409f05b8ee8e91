#include "crmin/oracle.hpp"

#include <algorithm>

#include "crmin/constancy.hpp"
#include "crmin/errors.hpp"
#include "crmin/manifold.hpp"
#include "crmin/parser.hpp"
#include "crmin/random.hpp"
#include "crmin/vector_field.hpp"

namespace crmin {

namespace {

struct Point {
    // Values for the intrinsic coordinates (z, w, zeta); xi is derived.
    std::vector<GaussianRational> z, w, zeta, xi;
    std::string describe(const VariableFrame& intr) const {
        std::string s = "(";
        std::size_t n = 0;
        auto app = [&](const std::vector<GaussianRational>& block) {
            for (const auto& v : block) {
                if (n++) s += ", ";
                s += to_string(v);
            }
        };
        app(z);
        app(w);
        app(zeta);
        (void)intr;
        return s + ")";
    }

    std::vector<GaussianRational> intrinsic() const {
        std::vector<GaussianRational> v = z;
        v.insert(v.end(), w.begin(), w.end());
        v.insert(v.end(), zeta.begin(), zeta.end());
        return v;
    }
    std::vector<GaussianRational> full() const {
        std::vector<GaussianRational> v = intrinsic();
        v.insert(v.end(), xi.begin(), xi.end());
        return v;
    }
    std::vector<GaussianRational> t_values() const {
        std::vector<GaussianRational> v = z;
        v.insert(v.end(), w.begin(), w.end());
        return v;
    }
    std::vector<GaussianRational> tau_values() const {
        std::vector<GaussianRational> v = zeta;
        v.insert(v.end(), xi.begin(), xi.end());
        return v;
    }
};

std::vector<GaussianRational> conj_all(const std::vector<GaussianRational>& v) {
    std::vector<GaussianRational> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.conj());
    return out;
}

// Value of s_bar at tau: conj(s(conj tau)), using only point evaluation and
// scalar conjugation, independent of the symbolic bar operator.
GaussianRational bar_value(const TruncatedSeries& t_series,
                           const std::vector<GaussianRational>& tau) {
    return evaluate(t_series, conj_all(tau)).conj();
}

} // namespace

OracleResult run_eval_oracle(int m, int d, const std::vector<std::string>& theta_exprs,
                             const std::string& f_expr, const std::string& g_expr,
                             const OracleOptions& options) {
    // Learn the input degrees by parsing once at a generous order.
    auto degree_of = [&](const std::string& expr, FrameKind kind) {
        ParseOptions p;
        p.frame = kind;
        return static_cast<int>(parse_expression(expr, m, d, 1 << 20, p).degree());
    };

    int theta_degree = 1;
    for (const auto& e : theta_exprs) theta_degree = std::max(theta_degree, degree_of(e, FrameKind::Full));

    SplitMix64 rng(options.seed);
    std::string f_text = f_expr, g_text = g_expr;
    VariableFrame t_probe(FrameKind::T, m, d);
    if (f_text.empty()) {
        SeriesSampler sampler;
        f_text = to_string(random_series(rng, t_probe, 5, sampler));
    }
    if (g_text.empty()) {
        SeriesSampler sampler;
        g_text = to_string(random_series(rng, t_probe, 5, sampler));
    }
    int f_degree = std::max(1, degree_of(f_text, FrameKind::T));
    int g_degree = std::max(1, degree_of(g_text, FrameKind::T));

    // Order beyond which nothing in the defect/Wronskian computations can
    // be truncated: restriction multiplies degrees by at most theta_degree,
    // products add them.
    int work = (f_degree + g_degree + 2) * std::max(1, theta_degree) +
               theta_degree * theta_degree + 2;

    ParseOptions full_opt;
    full_opt.frame = FrameKind::Full;
    std::vector<TruncatedSeries> theta;
    for (const auto& e : theta_exprs) theta.push_back(parse_expression(e, m, d, work, full_opt));
    ManifoldModel model = new_manifold(m, d, theta, work);

    ParseOptions t_opt;
    t_opt.frame = FrameKind::T;
    TruncatedSeries f = parse_expression(f_text, m, d, work, t_opt);
    TruncatedSeries g = parse_expression(g_text, m, d, work, t_opt);
    SeriesPair pair(f, g);

    const VariableFrame intr = model.intrinsic_frame();
    TruncatedSeries fi = reframe(f, intr);
    TruncatedSeries gi = reframe(g, intr);
    TruncatedSeries defect = reality_defect(pair, model);
    auto l_fields = build_L_fields(model);
    std::vector<TruncatedSeries> wronskians;
    for (const auto& field : l_fields) wronskians.push_back(wronskian(fi, gi, field));
    TruncatedSeries product_fg = f * g;

    OracleResult result;
    result.working_precision = work;
    result.checks.push_back({"defect", 0, 0, ""});
    for (int k = 0; k < m; ++k)
        result.checks.push_back({"wronskian_L" + std::to_string(k + 1), 0, 0, ""});
    result.checks.push_back({"restriction", 0, 0, ""});
    result.checks.push_back({"product", 0, 0, ""});

    auto record = [&](const std::string& name, bool match, const Point& pt) {
        for (auto& c : result.checks) {
            if (c.name != name) continue;
            ++c.comparisons;
            if (!match) {
                ++c.mismatches;
                if (c.first_mismatch.empty()) c.first_mismatch = pt.describe(intr);
                result.all_match = false;
            }
            return;
        }
    };

    for (int p = 0; p <= options.points; ++p) {
        Point pt;
        auto sample_block = [&](int count) {
            std::vector<GaussianRational> v;
            for (int i = 0; i < count; ++i)
                v.emplace_back(p == 0 ? Rational(0)
                                      : random_rational(rng, options.max_numerator,
                                                        options.max_denominator));
            return v;
        };
        pt.z = sample_block(m);
        pt.w = sample_block(d);
        pt.zeta = sample_block(m);
        // xi := theta(zeta, z, w), evaluated exactly (theta has no xi terms,
        // so zero placeholders are safe).
        std::vector<GaussianRational> full_probe = pt.z;
        full_probe.insert(full_probe.end(), pt.w.begin(), pt.w.end());
        full_probe.insert(full_probe.end(), pt.zeta.begin(), pt.zeta.end());
        for (int j = 0; j < d; ++j) full_probe.emplace_back(Rational(0));
        for (int j = 0; j < d; ++j) pt.xi.push_back(evaluate(model.theta()[j], full_probe));

        const auto intr_vals = pt.intrinsic();
        const auto t_vals = pt.t_values();
        const auto tau_vals = pt.tau_values();

        // defect: symbolic series at the point vs pointwise arithmetic
        GaussianRational fv = evaluate(f, t_vals);
        GaussianRational gv = evaluate(g, t_vals);
        GaussianRational numeric_defect =
            fv * bar_value(g, tau_vals) - gv * bar_value(f, tau_vals);
        record("defect", evaluate(defect, intr_vals) == numeric_defect, pt);

        // Wronskians: products and subtractions done on values
        for (int k = 0; k < m; ++k) {
            GaussianRational lg(0), lf(0);
            for (std::size_t c = 0; c < intr.arity(); ++c) {
                if (l_fields[k].component(c).empty()) continue;
                GaussianRational coeff = evaluate(l_fields[k].component(c), intr_vals);
                lg += coeff * evaluate(derivative(gi, c), intr_vals);
                lf += coeff * evaluate(derivative(fi, c), intr_vals);
            }
            GaussianRational numeric_w = fv * lg - gv * lf;
            record("wronskian_L" + std::to_string(k + 1),
                   evaluate(wronskians[k], intr_vals) == numeric_w, pt);
        }

        // restriction: substituting xi := theta then evaluating equals
        // evaluating the unrestricted series at (z, w, zeta, xi)
        bool restriction_ok = true;
        for (int j = 0; j < d; ++j) {
            GaussianRational direct = evaluate(model.theta_bar()[j], pt.full());
            GaussianRational restricted =
                evaluate(model.restrict_to_M(model.theta_bar()[j]), intr_vals);
            if (direct != restricted) restriction_ok = false;
        }
        record("restriction", restriction_ok, pt);

        record("product", evaluate(product_fg, t_vals) == fv * gv, pt);
        ++result.points_sampled;
    }
    return result;
}

} // namespace crmin
