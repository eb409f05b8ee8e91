#include "crmin/series.hpp"

#include <algorithm>
#include <ostream>

#include "crmin/errors.hpp"

namespace crmin {

namespace {

void require_same_frame(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
    if (a.frame() != b.frame())
        throw FrameMismatchError(std::string(op) + ": " + a.frame().describe() + " vs " +
                                 b.frame().describe());
}

int min_precision(const TruncatedSeries& a, const TruncatedSeries& b) {
    return std::min(a.precision(), b.precision());
}

} // namespace

TruncatedSeries::TruncatedSeries(VariableFrame frame, int precision)
    : frame_(std::move(frame)), precision_(precision) {
    if (precision_ < 1)
        throw PrecisionUnderflowError("series precision must be >= 1, got " +
                                      std::to_string(precision_));
}

void TruncatedSeries::insert_term(const Exponent& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    if (e.size() != frame_.arity())
        throw ValidationError("exponent arity does not match frame " + frame_.describe());
    if (total_degree(e) >= static_cast<std::uint64_t>(precision_))
        throw ValidationError("monomial degree " + std::to_string(total_degree(e)) +
                              " not below precision " + std::to_string(precision_));
    auto [it, inserted] = coeffs_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::constant(const VariableFrame& frame, const GaussianRational& value,
                                          int precision) {
    TruncatedSeries s(frame, precision);
    s.insert_term(Exponent(frame.arity(), 0), value);
    return s;
}

TruncatedSeries TruncatedSeries::variable(const VariableFrame& frame, std::size_t var_index,
                                          int precision) {
    if (var_index >= frame.arity())
        throw ValidationError("variable index out of range for frame " + frame.describe());
    if (precision < 2)
        throw PrecisionUnderflowError("a coordinate function needs precision >= 2");
    TruncatedSeries s(frame, precision);
    Exponent e(frame.arity(), 0);
    e[var_index] = 1;
    s.insert_term(e, GaussianRational(1));
    return s;
}

TruncatedSeries TruncatedSeries::from_terms(
    const VariableFrame& frame, int precision,
    std::vector<std::pair<Exponent, GaussianRational>> terms) {
    TruncatedSeries s(frame, precision);
    for (auto& [e, c] : terms) s.insert_term(e, c);
    return s;
}

std::optional<std::uint64_t> TruncatedSeries::order() const {
    if (coeffs_.empty()) return std::nullopt;
    // grlex sorts by total degree first, so begin() realizes the minimum.
    return total_degree(coeffs_.begin()->first);
}

std::optional<std::pair<Exponent, GaussianRational>> TruncatedSeries::leading_term() const {
    if (coeffs_.empty()) return std::nullopt;
    return std::make_pair(coeffs_.begin()->first, coeffs_.begin()->second);
}

GaussianRational TruncatedSeries::coefficient(const Exponent& e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? GaussianRational(0) : it->second;
}

GaussianRational TruncatedSeries::constant_term() const {
    return coefficient(Exponent(frame_.arity(), 0));
}

std::uint64_t TruncatedSeries::degree() const {
    std::uint64_t deg = 0;
    for (const auto& [e, c] : coeffs_) deg = std::max(deg, total_degree(e));
    return deg;
}

TruncatedSeries TruncatedSeries::truncated(int new_precision) const {
    if (new_precision > precision_)
        throw PrecisionUnderflowError("cannot raise precision from " + std::to_string(precision_) +
                                      " to " + std::to_string(new_precision));
    TruncatedSeries s(frame_, new_precision);
    for (const auto& [e, c] : coeffs_)
        if (total_degree(e) < static_cast<std::uint64_t>(new_precision)) s.coeffs_.emplace(e, c);
    return s;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries s(frame_, precision_);
    for (const auto& [e, c] : coeffs_) s.coeffs_.emplace(e, -c);
    return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    require_same_frame(*this, o, "add");
    TruncatedSeries s(frame_, min_precision(*this, o));
    auto keep = [&](const Exponent& e) {
        return total_degree(e) < static_cast<std::uint64_t>(s.precision_);
    };
    for (const auto& [e, c] : coeffs_)
        if (keep(e)) s.coeffs_.emplace(e, c);
    for (const auto& [e, c] : o.coeffs_) {
        if (!keep(e)) continue;
        auto [it, inserted] = s.coeffs_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) s.coeffs_.erase(it);
        }
    }
    return s;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    return *this + (-o);
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    require_same_frame(*this, o, "mul");
    TruncatedSeries s(frame_, min_precision(*this, o));
    auto bound = static_cast<std::uint64_t>(s.precision_);
    for (const auto& [ea, ca] : coeffs_) {
        std::uint64_t da = total_degree(ea);
        if (da >= bound) continue;
        for (const auto& [eb, cb] : o.coeffs_) {
            if (da + total_degree(eb) >= bound) continue;
            Exponent e = exponent_sum(ea, eb);
            GaussianRational c = ca * cb;
            auto [it, inserted] = s.coeffs_.emplace(std::move(e), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) s.coeffs_.erase(it);
            }
        }
    }
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const GaussianRational& c) const {
    TruncatedSeries s(frame_, precision_);
    if (c.is_zero()) return s;
    for (const auto& [e, v] : coeffs_) s.coeffs_.emplace(e, v * c);
    return s;
}

TruncatedSeries operator*(const GaussianRational& c, const TruncatedSeries& p) {
    return p * c;
}

TruncatedSeries derivative(const TruncatedSeries& p, std::size_t var_index) {
    if (var_index >= p.frame().arity())
        throw ValidationError("derivative: variable index out of range");
    if (p.precision() <= 1)
        throw PrecisionUnderflowError("precision underflow: cannot differentiate a series known mod degree " +
                                      std::to_string(p.precision()));
    TruncatedSeries s(p.frame(), p.precision() - 1);
    std::vector<std::pair<Exponent, GaussianRational>> terms;
    for (const auto& [e, c] : p.coeffs()) {
        if (e[var_index] == 0) continue;
        Exponent de = e;
        de[var_index] -= 1;
        terms.emplace_back(std::move(de), c * GaussianRational(static_cast<long>(e[var_index])));
    }
    return TruncatedSeries::from_terms(p.frame(), p.precision() - 1, std::move(terms));
}

TruncatedSeries substitute(const TruncatedSeries& p, const VariableFrame& target,
                           const std::vector<TruncatedSeries>& assignment) {
    const std::size_t arity = p.frame().arity();
    if (assignment.size() != arity)
        throw ValidationError("substitute: expected " + std::to_string(arity) +
                              " assignment entries, got " + std::to_string(assignment.size()));
    int result_precision = p.precision();
    for (const auto& s : assignment) {
        if (s.frame() != target)
            throw FrameMismatchError("substitute: assignment entry in frame " +
                                     s.frame().describe() + ", expected " + target.describe());
        result_precision = std::min(result_precision, s.precision());
    }

    // Largest power of each variable actually needed.
    std::vector<std::uint32_t> max_pow(arity, 0);
    for (const auto& [e, c] : p.coeffs())
        for (std::size_t i = 0; i < arity; ++i) max_pow[i] = std::max(max_pow[i], e[i]);
    for (std::size_t i = 0; i < arity; ++i) {
        if (max_pow[i] > 0 && !assignment[i].constant_term().is_zero())
            throw ValidationError("substitute: series for used variable '" +
                                  p.frame().var_name(i) +
                                  "' has a nonzero constant term, which breaks truncation semantics");
    }

    // Power cache, truncated to the result precision at every product.
    std::vector<std::vector<TruncatedSeries>> powers(arity);
    for (std::size_t i = 0; i < arity; ++i) {
        if (max_pow[i] == 0) continue;
        powers[i].reserve(max_pow[i]);
        powers[i].push_back(assignment[i].truncated(result_precision));
        for (std::uint32_t k = 2; k <= max_pow[i]; ++k)
            powers[i].push_back(powers[i].back() * powers[i][0]);
    }

    TruncatedSeries result(target, result_precision);
    auto bound = static_cast<std::uint64_t>(result_precision);
    for (const auto& [e, c] : p.coeffs()) {
        // Assigned series have order >= 1, so a degree-k monomial of p only
        // contributes from degree k on.
        if (total_degree(e) >= bound) continue;
        TruncatedSeries term = TruncatedSeries::constant(target, c, result_precision);
        for (std::size_t i = 0; i < arity; ++i)
            if (e[i] > 0) term = term * powers[i][e[i] - 1];
        result = result + term;
    }
    return result;
}

TruncatedSeries conjugate_swap(const TruncatedSeries& p) {
    const auto kind = p.frame().kind;
    if (kind == FrameKind::Intrinsic)
        throw ValidationError("conjugate_swap: unsupported frame " + p.frame().describe());
    const auto slot_map = p.frame().conjugate_slot_map();
    std::vector<std::pair<Exponent, GaussianRational>> terms;
    terms.reserve(p.term_count());
    for (const auto& [e, c] : p.coeffs()) {
        Exponent ne(e.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[slot_map[i]] = e[i];
        terms.emplace_back(std::move(ne), c.conj());
    }
    return TruncatedSeries::from_terms(p.frame().conjugate_frame(), p.precision(),
                                       std::move(terms));
}

TruncatedSeries reframe(const TruncatedSeries& p, const VariableFrame& target) {
    if (p.frame() == target) return p;
    if (p.frame().m != target.m || p.frame().d != target.d)
        throw FrameMismatchError("reframe: incompatible dimensions " + p.frame().describe() +
                                 " vs " + target.describe());
    // Variable index map by name, resolved lazily so unused missing
    // variables are fine.
    const std::size_t arity = p.frame().arity();
    std::vector<std::optional<std::size_t>> index_map(arity);
    auto map_index = [&](std::size_t i) -> std::size_t {
        if (!index_map[i]) {
            auto found = target.find_var(p.frame().var_name(i));
            if (!found)
                throw FrameMismatchError("reframe: variable '" + p.frame().var_name(i) +
                                         "' does not exist in frame " + target.describe());
            index_map[i] = *found;
        }
        return *index_map[i];
    };
    std::vector<std::pair<Exponent, GaussianRational>> terms;
    terms.reserve(p.term_count());
    for (const auto& [e, c] : p.coeffs()) {
        Exponent ne(target.arity(), 0);
        for (std::size_t i = 0; i < arity; ++i)
            if (e[i] > 0) ne[map_index(i)] = e[i];
        terms.emplace_back(std::move(ne), c);
    }
    return TruncatedSeries::from_terms(target, p.precision(), std::move(terms));
}

GaussianRational evaluate(const TruncatedSeries& p, const std::vector<GaussianRational>& values) {
    if (values.size() != p.frame().arity())
        throw ValidationError("evaluate: expected " + std::to_string(p.frame().arity()) +
                              " values, got " + std::to_string(values.size()));
    GaussianRational sum(0);
    for (const auto& [e, c] : p.coeffs()) {
        GaussianRational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) term *= values[i];
        sum += term;
    }
    return sum;
}

int cofactor_cancel(const TruncatedSeries& product_is_zero, const TruncatedSeries& factor) {
    require_same_frame(product_is_zero, factor, "cofactor_cancel");
    if (!product_is_zero.empty())
        throw ValidationError(
            "cofactor_cancel: product is not zero at precision " +
                std::to_string(product_is_zero.precision()),
            monomial_string(product_is_zero.frame(), product_is_zero.leading_term()->first));
    auto ord = factor.order();
    if (!ord)
        throw ValidationError("cofactor_cancel: factor is zero at its precision, cannot cancel");
    int bound = product_is_zero.precision() - static_cast<int>(*ord);
    if (bound <= 0)
        throw InsufficientPrecisionError(
            "cofactor_cancel: factor order " + std::to_string(*ord) +
                " exhausts product precision " + std::to_string(product_is_zero.precision()),
            "cofactor_cancel");
    return bound;
}

std::string monomial_string(const VariableFrame& frame, const Exponent& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += frame.var_name(i);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const TruncatedSeries& p) {
    if (p.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.coeffs()) {
        bool neg = print_negative(c);
        GaussianRational body = neg ? -c : c;
        std::string mon;
        if (total_degree(e) > 0) mon = monomial_string(p.frame(), e);
        std::string term;
        if (mon.empty())
            term = to_string(body);
        else if (body == GaussianRational(1))
            term = mon;
        else
            term = to_string(body) + "*" + mon;
        if (first) {
            out += neg ? "-" + term : term;
            first = false;
        } else {
            out += neg ? " - " + term : " + " + term;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& p) {
    return os << to_string(p);
}

} // namespace crmin
