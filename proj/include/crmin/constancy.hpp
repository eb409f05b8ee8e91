#ifndef CRMIN_CONSTANCY_HPP
#define CRMIN_CONSTANCY_HPP

#include <optional>
#include <string>
#include <vector>

#include "crmin/bracket_word.hpp"
#include "crmin/finite_type.hpp"
#include "crmin/manifold.hpp"
#include "crmin/series.hpp"
#include "crmin/vector_field.hpp"

namespace crmin {

// The pair (f, g) standing in for the formal ratio f/g. Both live in the
// T frame and are aligned to a shared precision; neither may be the zero
// table.
struct SeriesPair {
    TruncatedSeries f;
    TruncatedSeries g;
    SeriesPair(TruncatedSeries f_series, TruncatedSeries g_series);
    int precision() const { return f.precision(); }
};

// One certified identity of the shape f*Xg - g*Xf == 0: `residual` is that
// series truncated to the degree bound the bookkeeping can actually
// certify, so the step succeeded iff the table is empty.
struct WronskianIdentity {
    std::string label; // bracket word ("L1", "[U1,L1]") or coordinate ("w1")
    TruncatedSeries residual;
    int certified_precision;
    bool holds() const { return residual.empty(); }
};

enum class CertificateOutcome {
    ConstantFound,
    DefectNonzero,
    NotFiniteType,
    InsufficientPrecision,
};

const char* outcome_name(CertificateOutcome o);

// Record of the final leading-term induction: the coefficients of f and
// c*g compared in grlex order below the certified bound.
struct InductionTrace {
    int monomials_checked = 0;
    std::optional<std::string> mismatch_monomial;
    std::vector<std::string> steps; // per-monomial lines, filled in trace mode
};

// Everything the pipeline established, stage by stage. `constant` is
// meaningful only for ConstantFound, in which case f - constant*g has an
// empty table up to certified_precision and the constant is real and
// nonzero.
struct ConstancyCertificate {
    CertificateOutcome outcome = CertificateOutcome::InsufficientPrecision;
    GaussianRational constant;
    bool is_real = false;
    bool is_nonzero = false;
    int certified_precision = 0;

    std::optional<std::string> witness; // offending monomial, when there is one
    GaussianRational witness_coefficient;
    std::string failure_stage; // stage that ran out of precision

    bool defect_empty = false;
    int defect_precision = 0;
    std::optional<FiniteTypeReport> finite_type;
    std::vector<WronskianIdentity> first_order;
    std::vector<WronskianIdentity> bracket_identities;
    int frame_inversion_precision = 0;
    std::vector<WronskianIdentity> coordinate_identities;
    InductionTrace induction;
};

// f(t) g_bar(tau) - g(t) f_bar(tau) restricted to the manifold: the
// hypothesis holds mod the result precision iff the table is empty.
TruncatedSeries reality_defect(const SeriesPair& pair, const ManifoldModel& model);

// First differentiation round: certifies f*L_k g - g*L_k f == 0 for every k
// (via multiplication by g_bar restricted and integral-domain cancellation)
// and records the trivially vanishing U_k identities. Requires an empty
// reality defect.
std::vector<WronskianIdentity> first_order_identities(const SeriesPair& pair,
                                                      const ManifoldModel& model);

// S(f Rg - g Rf) - R(f Sg - g Sf) - 2(Sf Rg - Sg Rf) + f [R,S]g - g [R,S]f.
// A ring identity: the empty table for every f, g, R, S regardless of any
// hypothesis; serves as a self-test of the bracket/apply machinery and
// justifies propagating Wronskian identities through brackets.
TruncatedSeries leibniz_bracket_identity(const VectorField& R, const VectorField& S,
                                         const TruncatedSeries& f, const TruncatedSeries& g);

// Certifies f*Tg - g*Tf == 0 for each bracket word. The certified bound
// starts from the first-order bounds and loses max(1, ord f) per bracket
// level (one differentiation plus one cancellation by f).
std::vector<WronskianIdentity> bracket_closure(const SeriesPair& pair, const ManifoldModel& model,
                                               const std::vector<BracketWord>& words);

// Expresses the coordinate fields through a spanning bracket frame: returns
// a[i][j] with d/dx_i = sum_j a[i][j] * T_j, solved by the contraction
// iteration u <- A(0)^{-1} (e_i - (A(x) - A(0)) u), which stabilizes within
// the working precision because A(x) - A(0) has order >= 1.
std::vector<std::vector<TruncatedSeries>> invert_bracket_frame(
    const ManifoldModel& model, const std::vector<VectorField>& frame_fields);

// Certifies f * d_i g - g * d_i f == 0 for every intrinsic coordinate by
// writing d_i through the spanning frame. frame_bounds are the certified
// precisions from bracket_closure, in the same order as frame_fields.
std::vector<WronskianIdentity> coordinate_identities(
    const SeriesPair& pair, const ManifoldModel& model,
    const std::vector<VectorField>& frame_fields, const std::vector<int>& frame_bounds,
    const std::vector<std::vector<TruncatedSeries>>& inverted_frame);

struct RatioResult {
    bool proportional = false;
    GaussianRational constant;
    std::optional<std::string> witness_monomial;
    GaussianRational witness_coefficient;
    InductionTrace trace;
};

// Leading-term comparison plus the direct verification f - c*g == 0 below
// certified_precision. A leading-exponent mismatch or a nonzero residual
// yields the grlex-least witness monomial. `detailed_trace` additionally
// records one line per compared coefficient.
RatioResult ratio_constant(const TruncatedSeries& f, const TruncatedSeries& g,
                           int certified_precision, bool detailed_trace = false);

// The full pipeline: defect check, finite-type gate, first-order and
// bracket Wronskian identities on the spanning frame, frame inversion,
// coordinate identities, ratio extraction, reality check.
ConstancyCertificate verify_constancy(const SeriesPair& pair, const ManifoldModel& model,
                                      int max_depth, bool detailed_trace = false);

// Corollary mode: g == 1, so a series real on the manifold must be
// constant.
ConstancyCertificate verify_real_constant(const TruncatedSeries& f, const ManifoldModel& model,
                                          int max_depth, bool detailed_trace = false);

} // namespace crmin

#endif
