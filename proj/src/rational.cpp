#include "crmin/rational.hpp"

#include <ostream>

#include "crmin/errors.hpp"

namespace crmin {

Rational make_rational(long num, long den) {
    if (den == 0)
        throw ValidationError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(text);
            return Rational(n);
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0)
            throw ValidationError("zero denominator in '" + text + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ValidationError("malformed rational '" + text + "'");
    }
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

GaussianRational GaussianRational::operator/(const GaussianRational& o) const {
    if (o.is_zero())
        throw ValidationError("division by zero in Q(i)");
    Rational norm = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / norm, (im * o.re - re * o.im) / norm};
}

std::string to_string(const GaussianRational& c) {
    if (c.im == 0)
        return to_string(c.re);
    std::string imag;
    if (c.im == 1)
        imag = "i";
    else if (c.im == -1)
        imag = "-i";
    else
        imag = to_string(c.im) + "*i";
    if (c.re == 0)
        return imag;
    // Mixed real/imaginary values print parenthesized so they stay a single
    // factor inside a term.
    std::string tail = (c.im > 0) ? " + " : " - ";
    std::string imag_abs = (c.im == 1 || c.im == -1) ? "i" : to_string(abs(c.im)) + "*i";
    return "(" + to_string(c.re) + tail + imag_abs + ")";
}

bool print_negative(const GaussianRational& c) {
    if (c.re != 0)
        return c.re < 0;
    return c.im < 0;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& c) {
    return os << to_string(c);
}

} // namespace crmin
