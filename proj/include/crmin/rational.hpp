#ifndef CRMIN_RATIONAL_HPP
#define CRMIN_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace crmin {

using Rational = mpq_class;

// Makes a canonical (lowest-terms) rational from a numerator/denominator pair.
Rational make_rational(long num, long den = 1);

// Parses "p" or "p/q" with arbitrary-precision integers. Throws ValidationError
// on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

// Element of Q(i): re + im*i with exact rational parts, always in lowest
// terms (mpq_class keeps itself canonical). Equality is structural.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long n) : re(n), im(0) {} // NOLINT: implicit by design
    explicit GaussianRational(Rational real_part) : re(std::move(real_part)), im(0) {}
    GaussianRational(Rational real_part, Rational imag_part)
        : re(std::move(real_part)), im(std::move(imag_part)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    // Exact division; throws ValidationError on division by zero.
    GaussianRational operator/(const GaussianRational& o) const;

    GaussianRational& operator+=(const GaussianRational& o) { re += o.re; im += o.im; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }
};

// Renders a coefficient the expression grammar can read back:
// "3", "-1/2", "i", "-2*i", "(1 + 2*i)".
std::string to_string(const GaussianRational& c);

// Sign used when joining printed terms with " + " / " - ": negative iff
// re < 0, or re == 0 and im < 0.
bool print_negative(const GaussianRational& c);

std::ostream& operator<<(std::ostream& os, const GaussianRational& c);

} // namespace crmin

#endif
