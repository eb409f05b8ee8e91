#include "crmin/constancy.hpp"

#include <algorithm>

#include "crmin/errors.hpp"
#include "crmin/linalg.hpp"

namespace crmin {

namespace {

TruncatedSeries embed_t_series(const TruncatedSeries& s, const VariableFrame& target) {
    return reframe(s, target);
}

// g_bar restricted to the manifold: conjugate, then substitute xi := theta.
TruncatedSeries bar_on_manifold(const TruncatedSeries& t_series, const ManifoldModel& model) {
    return model.restrict_to_M(reframe(conjugate_swap(t_series), model.full_frame()));
}

std::string witness_of(const TruncatedSeries& s) {
    return monomial_string(s.frame(), s.leading_term()->first);
}

// Certified bound for one bracket word, per the cancellation bookkeeping:
// generators carry their first-order bounds, every bracket node costs
// max(1, ord f).
int chain_bound(const BracketWord& word, int l_bound, int u_bound, int ord_f) {
    if (word.is_leaf()) return word.leaf_is_u() ? u_bound : l_bound;
    int left = chain_bound(word.left(), l_bound, u_bound, ord_f);
    int right = chain_bound(word.right(), l_bound, u_bound, ord_f);
    return std::min(left, right) - std::max(1, ord_f);
}

} // namespace

const char* outcome_name(CertificateOutcome o) {
    switch (o) {
        case CertificateOutcome::ConstantFound: return "constant_found";
        case CertificateOutcome::DefectNonzero: return "defect_nonzero";
        case CertificateOutcome::NotFiniteType: return "not_finite_type";
        case CertificateOutcome::InsufficientPrecision: return "insufficient_precision";
    }
    return "?";
}

SeriesPair::SeriesPair(TruncatedSeries f_series, TruncatedSeries g_series)
    : f(std::move(f_series)), g(std::move(g_series)) {
    if (f.frame().kind != FrameKind::T || g.frame().kind != FrameKind::T)
        throw FrameMismatchError("a series pair lives in the T frame");
    if (f.frame() != g.frame())
        throw FrameMismatchError("series pair frames disagree");
    int shared = std::min(f.precision(), g.precision());
    f = f.truncated(shared);
    g = g.truncated(shared);
    if (f.empty())
        throw ValidationError("f is identically zero at the working precision");
    if (g.empty())
        throw ValidationError("g is identically zero at the working precision");
}

TruncatedSeries reality_defect(const SeriesPair& pair, const ManifoldModel& model) {
    if (pair.f.frame().m != model.m() || pair.f.frame().d != model.d())
        throw FrameMismatchError("series pair dimensions do not match the model");
    const VariableFrame full = model.full_frame();
    TruncatedSeries f_full = embed_t_series(pair.f, full);
    TruncatedSeries g_full = embed_t_series(pair.g, full);
    TruncatedSeries f_bar = reframe(conjugate_swap(pair.f), full);
    TruncatedSeries g_bar = reframe(conjugate_swap(pair.g), full);
    return model.restrict_to_M(f_full * g_bar - g_full * f_bar);
}

std::vector<WronskianIdentity> first_order_identities(const SeriesPair& pair,
                                                      const ManifoldModel& model) {
    TruncatedSeries defect = reality_defect(pair, model);
    if (!defect.empty())
        throw ValidationError("the reality identity does not hold for this pair",
                              witness_of(defect));

    const VariableFrame intr = model.intrinsic_frame();
    TruncatedSeries fi = embed_t_series(pair.f, intr);
    TruncatedSeries gi = embed_t_series(pair.g, intr);
    TruncatedSeries g_bar = bar_on_manifold(pair.g, model);
    if (g_bar.empty())
        throw InsufficientPrecisionError(
            "g_bar restricted to the manifold vanishes at the available precision",
            "first_order_identities");

    std::vector<WronskianIdentity> out;
    const auto l_fields = build_L_fields(model);
    for (int k = 0; k < model.m(); ++k) {
        TruncatedSeries w = wronskian(fi, gi, l_fields[k]);
        TruncatedSeries product = w * g_bar;
        if (!product.empty())
            throw ValidationError(
                "differentiated reality identity fails for L" + std::to_string(k + 1),
                witness_of(product));
        int bound = cofactor_cancel(product, g_bar);
        out.push_back({"L" + std::to_string(k + 1), w.truncated(bound), bound});
    }
    const auto u_fields = build_U_fields(model);
    for (int k = 0; k < model.m(); ++k) {
        // f and g do not involve zeta, so these vanish term by term.
        TruncatedSeries w = wronskian(fi, gi, u_fields[k]);
        out.push_back({"U" + std::to_string(k + 1), w, w.precision()});
    }
    return out;
}

TruncatedSeries leibniz_bracket_identity(const VectorField& R, const VectorField& S,
                                         const TruncatedSeries& f, const TruncatedSeries& g) {
    TruncatedSeries wr = wronskian(f, g, R);
    TruncatedSeries ws = wronskian(f, g, S);
    TruncatedSeries cross = apply_field(S, f) * apply_field(R, g) -
                            apply_field(S, g) * apply_field(R, f);
    return apply_field(S, wr) - apply_field(R, ws) - (cross + cross) +
           wronskian(f, g, lie_bracket(R, S));
}

std::vector<WronskianIdentity> bracket_closure(const SeriesPair& pair, const ManifoldModel& model,
                                               const std::vector<BracketWord>& words) {
    const VariableFrame intr = model.intrinsic_frame();
    TruncatedSeries fi = embed_t_series(pair.f, intr);
    TruncatedSeries gi = embed_t_series(pair.g, intr);
    TruncatedSeries g_bar = bar_on_manifold(pair.g, model);
    if (g_bar.empty())
        throw InsufficientPrecisionError(
            "g_bar restricted to the manifold vanishes at the available precision",
            "bracket_closure");
    const int l_bound = pair.precision() - 1 - static_cast<int>(*g_bar.order());
    const int u_bound = pair.precision() - 1;
    const int ord_f = static_cast<int>(*fi.order());

    const auto l_fields = build_L_fields(model);
    const auto u_fields = build_U_fields(model);

    std::vector<WronskianIdentity> out;
    for (const auto& word : words) {
        int bound = chain_bound(word, l_bound, u_bound, ord_f);
        if (bound <= 0)
            throw InsufficientPrecisionError("certified bound exhausted at word " +
                                                 word.to_string(),
                                             "bracket_closure");
        VectorField field = materialize(word, l_fields, u_fields);
        TruncatedSeries v = wronskian(fi, gi, field);
        bound = std::min(bound, v.precision());
        out.push_back({word.to_string(), v.truncated(bound), bound});
    }
    return out;
}

std::vector<std::vector<TruncatedSeries>> invert_bracket_frame(
    const ManifoldModel& model, const std::vector<VectorField>& frame_fields) {
    const VariableFrame intr = model.intrinsic_frame();
    const std::size_t n = intr.arity();
    if (frame_fields.size() != n)
        throw ValidationError("invert_bracket_frame: expected " + std::to_string(n) +
                              " frame fields");

    int work_precision = frame_fields.front().precision();
    for (const auto& f : frame_fields) work_precision = std::min(work_precision, f.precision());

    // A[r][c] = component r of field c; constant part must be invertible.
    std::vector<std::vector<TruncatedSeries>> a_series(n);
    ScalarMatrix a0(n, std::vector<GaussianRational>(n));
    for (std::size_t r = 0; r < n; ++r) {
        a_series[r].reserve(n);
        for (std::size_t c = 0; c < n; ++c) {
            a_series[r].push_back(frame_fields[c].component(r).truncated(work_precision));
            a0[r][c] = a_series[r][c].constant_term();
        }
    }
    ScalarMatrix a0_inv = invert(a0); // singular would contradict the spanning frame

    // Higher-order part A(x) - A(0).
    std::vector<std::vector<TruncatedSeries>> a_high(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a_high[r].push_back(a_series[r][c] -
                                TruncatedSeries::constant(intr, a0[r][c], work_precision));

    std::vector<std::vector<TruncatedSeries>> coefficients;
    coefficients.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        // Start from the constant solution and iterate the contraction.
        std::vector<TruncatedSeries> u;
        for (std::size_t j = 0; j < n; ++j)
            u.push_back(TruncatedSeries::constant(intr, a0_inv[j][i], work_precision));
        for (int iter = 0; iter <= work_precision + 1; ++iter) {
            std::vector<TruncatedSeries> rhs;
            rhs.reserve(n);
            for (std::size_t r = 0; r < n; ++r) {
                TruncatedSeries acc = TruncatedSeries::constant(
                    intr, GaussianRational(r == i ? 1 : 0), work_precision);
                for (std::size_t l = 0; l < n; ++l) acc = acc - a_high[r][l] * u[l];
                rhs.push_back(std::move(acc));
            }
            std::vector<TruncatedSeries> next;
            next.reserve(n);
            for (std::size_t j = 0; j < n; ++j) {
                TruncatedSeries acc(intr, work_precision);
                for (std::size_t r = 0; r < n; ++r) acc = acc + rhs[r] * a0_inv[j][r];
                next.push_back(std::move(acc));
            }
            if (next == u) break;
            u = std::move(next);
            if (iter == work_precision + 1)
                throw Error("internal: frame inversion did not stabilize");
        }
        // Exact residual check A(x)*u - e_i == 0 at the working precision.
        for (std::size_t r = 0; r < n; ++r) {
            TruncatedSeries res(intr, work_precision);
            for (std::size_t l = 0; l < n; ++l) res = res + a_series[r][l] * u[l];
            res = res - TruncatedSeries::constant(intr, GaussianRational(r == i ? 1 : 0),
                                                  work_precision);
            if (!res.empty())
                throw Error("internal: frame inversion residual is nonzero");
        }
        coefficients.push_back(std::move(u));
    }
    return coefficients;
}

std::vector<WronskianIdentity> coordinate_identities(
    const SeriesPair& pair, const ManifoldModel& model,
    const std::vector<VectorField>& frame_fields, const std::vector<int>& frame_bounds,
    const std::vector<std::vector<TruncatedSeries>>& inverted_frame) {
    const VariableFrame intr = model.intrinsic_frame();
    const std::size_t n = intr.arity();
    if (frame_fields.size() != n || frame_bounds.size() != n || inverted_frame.size() != n)
        throw ValidationError("coordinate_identities: frame data of wrong size");

    TruncatedSeries fi = embed_t_series(pair.f, intr);
    TruncatedSeries gi = embed_t_series(pair.g, intr);

    int frame_bound = *std::min_element(frame_bounds.begin(), frame_bounds.end());
    int solve_precision = inverted_frame[0][0].precision();
    for (const auto& row : inverted_frame)
        for (const auto& entry : row) solve_precision = std::min(solve_precision, entry.precision());

    // Wronskians of the frame words, reused for the decomposition check.
    std::vector<TruncatedSeries> frame_wronskians;
    frame_wronskians.reserve(n);
    for (const auto& field : frame_fields) frame_wronskians.push_back(wronskian(fi, gi, field));

    std::vector<WronskianIdentity> out;
    for (std::size_t i = 0; i < n; ++i) {
        TruncatedSeries d_series = fi * derivative(gi, i) - gi * derivative(fi, i);
        int bound = std::min({frame_bound, solve_precision, d_series.precision()});
        if (bound <= 0)
            throw InsufficientPrecisionError("coordinate identity bound exhausted at " +
                                                 intr.var_name(i),
                                             "coordinate_identities");

        // Engine self-check: the direct Wronskian must agree with its
        // decomposition through the frame, exactly as computed series.
        TruncatedSeries decomposed(intr, solve_precision);
        for (std::size_t j = 0; j < n; ++j)
            decomposed = decomposed + inverted_frame[i][j] * frame_wronskians[j];
        if (!(d_series - decomposed).empty())
            throw Error("internal: coordinate Wronskian does not match its frame decomposition");

        out.push_back({intr.var_name(i), d_series.truncated(bound), bound});
    }
    return out;
}

RatioResult ratio_constant(const TruncatedSeries& f, const TruncatedSeries& g,
                           int certified_precision, bool detailed_trace) {
    if (f.empty() || g.empty())
        throw ValidationError("ratio_constant: zero series at the working precision");
    if (f.frame() != g.frame())
        throw FrameMismatchError("ratio_constant: frames disagree");

    RatioResult result;
    auto [alpha, f_lead] = *f.leading_term();
    auto [beta, g_lead] = *g.leading_term();

    if (alpha != beta) {
        // First coordinate where the leading exponents differ gives the
        // witness monomial x^(alpha+beta-1_i) of the cross identity.
        std::size_t i = 0;
        while (alpha[i] == beta[i]) ++i;
        Exponent w = exponent_sum(alpha, beta);
        w[i] -= 1;
        result.proportional = false;
        result.witness_monomial = monomial_string(f.frame(), w);
        result.witness_coefficient =
            f_lead * g_lead * GaussianRational(static_cast<long>(beta[i]) -
                                               static_cast<long>(alpha[i]));
        return result;
    }

    GaussianRational c = f_lead / g_lead;
    int check_bound = std::min({certified_precision, f.precision(), g.precision()});
    TruncatedSeries residual = (f - g * c).truncated(check_bound);

    // Replay of the grlex induction: every coefficient of f below the bound
    // must match the corresponding coefficient of c*g, walked in grlex order.
    TruncatedSeries cg = (g * c).truncated(check_bound);
    TruncatedSeries f_cut = f.truncated(check_bound);
    std::vector<Exponent> support;
    for (const auto& [e, v] : f_cut.coeffs()) support.push_back(e);
    for (const auto& [e, v] : cg.coeffs())
        if (f_cut.coefficient(e).is_zero()) support.push_back(e);
    std::sort(support.begin(), support.end(), GrlexLess{});
    for (const auto& e : support) {
        GaussianRational fv = f_cut.coefficient(e);
        GaussianRational gv = cg.coefficient(e);
        bool match = fv == gv;
        if (detailed_trace)
            result.trace.steps.push_back(monomial_string(f.frame(), e) + ": f=" + to_string(fv) +
                                         ", c*g=" + to_string(gv) +
                                         (match ? " ok" : " MISMATCH"));
        ++result.trace.monomials_checked;
        if (!match && !result.trace.mismatch_monomial)
            result.trace.mismatch_monomial = monomial_string(f.frame(), e);
    }

    if (!residual.empty()) {
        result.proportional = false;
        result.witness_monomial = witness_of(residual);
        result.witness_coefficient = residual.leading_term()->second;
        return result;
    }
    result.proportional = true;
    result.constant = c;
    return result;
}

ConstancyCertificate verify_constancy(const SeriesPair& pair, const ManifoldModel& model,
                                      int max_depth, bool detailed_trace) {
    ConstancyCertificate cert;

    TruncatedSeries defect = reality_defect(pair, model);
    cert.defect_precision = defect.precision();
    cert.defect_empty = defect.empty();
    if (!cert.defect_empty) {
        cert.outcome = CertificateOutcome::DefectNonzero;
        cert.witness = witness_of(defect);
        cert.witness_coefficient = defect.leading_term()->second;
        return cert;
    }

    cert.finite_type = finite_type_check(model, max_depth);
    if (!cert.finite_type->finite_type) {
        cert.outcome = CertificateOutcome::NotFiniteType;
        return cert;
    }

    try {
        cert.first_order = first_order_identities(pair, model);
        cert.bracket_identities = bracket_closure(pair, model, cert.finite_type->spanning_words);
        for (const auto& step : cert.first_order)
            if (!step.holds())
                throw Error("internal: first-order identity " + step.label +
                            " failed despite an empty defect");
        for (const auto& step : cert.bracket_identities)
            if (!step.holds())
                throw Error("internal: bracket identity " + step.label +
                            " failed despite an empty defect");

        auto inverted = invert_bracket_frame(model, cert.finite_type->spanning_fields);
        cert.frame_inversion_precision = inverted[0][0].precision();

        std::vector<int> frame_bounds;
        for (const auto& step : cert.bracket_identities)
            frame_bounds.push_back(step.certified_precision);
        cert.coordinate_identities = coordinate_identities(
            pair, model, cert.finite_type->spanning_fields, frame_bounds, inverted);
        for (const auto& step : cert.coordinate_identities)
            if (!step.holds())
                throw Error("internal: coordinate identity " + step.label +
                            " failed despite certified brackets");

        int final_bound = cert.coordinate_identities.front().certified_precision;
        for (const auto& step : cert.coordinate_identities)
            final_bound = std::min(final_bound, step.certified_precision);

        RatioResult ratio = ratio_constant(pair.f, pair.g, final_bound, detailed_trace);
        cert.induction = ratio.trace;
        if (!ratio.proportional) {
            // All identities hold to their bounds, yet the pair is not
            // proportional below the bound: only an order->=N tail of the
            // defect can explain it, which the truncation cannot see.
            cert.outcome = CertificateOutcome::InsufficientPrecision;
            cert.failure_stage = "ratio_constant";
            cert.witness = ratio.witness_monomial;
            cert.witness_coefficient = ratio.witness_coefficient;
            return cert;
        }
        cert.constant = ratio.constant;
        cert.is_real = ratio.constant.is_real();
        cert.is_nonzero = !ratio.constant.is_zero();
        cert.certified_precision = std::min({final_bound, pair.precision()});
        if (!cert.is_real || !cert.is_nonzero) {
            // A non-real ratio means the true defect is nonzero with order
            // >= N; the working order is too small to expose it.
            cert.outcome = CertificateOutcome::InsufficientPrecision;
            cert.failure_stage = "reality_check";
            return cert;
        }
        cert.outcome = CertificateOutcome::ConstantFound;
        return cert;
    } catch (const InsufficientPrecisionError& e) {
        cert.outcome = CertificateOutcome::InsufficientPrecision;
        cert.failure_stage = e.stage.empty() ? "pipeline" : e.stage;
        return cert;
    }
}

ConstancyCertificate verify_real_constant(const TruncatedSeries& f, const ManifoldModel& model,
                                          int max_depth, bool detailed_trace) {
    TruncatedSeries one =
        TruncatedSeries::constant(f.frame(), GaussianRational(1), f.precision());
    return verify_constancy(SeriesPair(f, one), model, max_depth, detailed_trace);
}

} // namespace crmin
