#ifndef CRMIN_SERIES_HPP
#define CRMIN_SERIES_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crmin/exponent.hpp"
#include "crmin/frame.hpp"
#include "crmin/rational.hpp"

namespace crmin {

// Sparse formal power series over Q(i), truncated at a precision order N:
// every coefficient of total degree < N is known exactly, degrees >= N are
// unknown and never stored. The table is canonical (no zero entries), so
// equality of frame + precision + table is structural equality.
//
// All values are immutable after construction; operations are pure.
class TruncatedSeries {
public:
    using CoeffMap = std::map<Exponent, GaussianRational, GrlexLess>;

    // Zero series known mod `precision` (precision >= 1).
    TruncatedSeries(VariableFrame frame, int precision);

    static TruncatedSeries constant(const VariableFrame& frame, const GaussianRational& value,
                                    int precision);
    // The coordinate function var_index; needs precision >= 2 to be visible.
    static TruncatedSeries variable(const VariableFrame& frame, std::size_t var_index,
                                    int precision);
    // Validates degrees < precision, merges duplicates, drops zeros.
    static TruncatedSeries from_terms(const VariableFrame& frame, int precision,
                                      std::vector<std::pair<Exponent, GaussianRational>> terms);

    const VariableFrame& frame() const { return frame_; }
    int precision() const { return precision_; }
    const CoeffMap& coeffs() const { return coeffs_; }

    bool empty() const { return coeffs_.empty(); }
    std::size_t term_count() const { return coeffs_.size(); }

    // Least total degree of a stored monomial; nullopt for the empty table.
    std::optional<std::uint64_t> order() const;
    // grlex-least stored monomial with its coefficient; nullopt if empty.
    std::optional<std::pair<Exponent, GaussianRational>> leading_term() const;

    GaussianRational coefficient(const Exponent& e) const;
    GaussianRational constant_term() const;
    std::uint64_t degree() const; // largest stored total degree, 0 if empty

    // Forgets information: new_precision <= precision.
    TruncatedSeries truncated(int new_precision) const;

    TruncatedSeries operator-() const;
    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const GaussianRational& c) const;

    bool operator==(const TruncatedSeries& o) const {
        return frame_ == o.frame_ && precision_ == o.precision_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

private:
    VariableFrame frame_;
    int precision_;
    CoeffMap coeffs_;

    void insert_term(const Exponent& e, const GaussianRational& c);
};

TruncatedSeries operator*(const GaussianRational& c, const TruncatedSeries& p);

// Term-wise partial derivative; costs one order of precision (throws
// PrecisionUnderflowError when none is left).
TruncatedSeries derivative(const TruncatedSeries& p, std::size_t var_index);

// Composition: assignment[i] (a series in `target`) replaces variable i of
// p's frame. Every variable p actually uses must map to a series with zero
// constant term, otherwise the precision bookkeeping is meaningless and a
// ValidationError is thrown. Result precision is the min over p and all
// assignment entries.
TruncatedSeries substitute(const TruncatedSeries& p, const VariableFrame& target,
                           const std::vector<TruncatedSeries>& assignment);

// The bar operator: conjugates coefficients and renames z<->zeta, w<->xi.
// T maps to TAU (and back); FULL maps to itself by the slot permutation.
// Involutive ring isomorphism.
TruncatedSeries conjugate_swap(const TruncatedSeries& p);

// Re-expresses p in another frame by matching variable names: an embedding
// when the target is larger, a projection when smaller. Every variable p
// uses must exist in the target frame.
TruncatedSeries reframe(const TruncatedSeries& p, const VariableFrame& target);

// Exact point evaluation; values.size() must equal the frame arity.
GaussianRational evaluate(const TruncatedSeries& p, const std::vector<GaussianRational>& values);

// Integral-domain cancellation at finite precision: given product == 0 mod
// its precision N and a factor of order w < N, the cofactor is certified
// zero mod N - w; returns that bound. Throws if the product table is not
// empty, the factor is zero at its precision, or the bound would be <= 0.
int cofactor_cancel(const TruncatedSeries& product_is_zero, const TruncatedSeries& factor);

// "z1^2*w1" (empty exponent renders as "1").
std::string monomial_string(const VariableFrame& frame, const Exponent& e);

// Deterministic rendering the expression parser accepts back; terms appear
// in grlex order.
std::string to_string(const TruncatedSeries& p);

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& p);

} // namespace crmin

#endif
