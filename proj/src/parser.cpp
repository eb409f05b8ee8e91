#include "crmin/parser.hpp"

#include <cctype>
#include <map>
#include <utility>
#include <vector>

#include "crmin/errors.hpp"

namespace crmin {

namespace {

constexpr std::uint32_t kMaxExponent = 100000;

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            out.push_back({Tok::Number, text.substr(start, i - start), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                ++i;
            out.push_back({Tok::Ident, text.substr(start, i - start), start});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '^': kind = Tok::Caret; break;
            case '/': kind = Tok::Slash; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            default:
                throw ParseError(i, std::string("unexpected character '") + c + "'");
        }
        out.push_back({kind, std::string(1, c), i});
        ++i;
    }
    out.push_back({Tok::End, "", text.size()});
    return out;
}

// Exact polynomial accumulator over the FULL frame, no truncation; the
// precision check happens once the whole expression is built.
struct Poly {
    std::map<Exponent, GaussianRational, GrlexLess> terms;

    static Poly constant(std::size_t arity, GaussianRational c) {
        Poly p;
        if (!c.is_zero()) p.terms.emplace(Exponent(arity, 0), std::move(c));
        return p;
    }

    void add_term(Exponent e, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms.emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
};

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
}

Poly poly_neg(const Poly& a) {
    Poly r;
    for (const auto& [e, c] : a.terms) r.terms.emplace(e, -c);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b, std::size_t err_pos) {
    Poly r;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            Exponent e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(ea[i]) + eb[i];
                if (s > kMaxExponent) throw ParseError(err_pos, "exponent too large");
                e[i] = static_cast<std::uint32_t>(s);
            }
            r.add_term(std::move(e), ca * cb);
        }
    return r;
}

Poly poly_pow(const Poly& a, unsigned long n, std::size_t arity, std::size_t err_pos) {
    Poly r = Poly::constant(arity, GaussianRational(1));
    Poly base = a;
    while (n > 0) {
        if (n & 1) r = poly_mul(r, base, err_pos);
        n >>= 1;
        if (n > 0) base = poly_mul(base, base, err_pos);
    }
    return r;
}

class Parser {
public:
    Parser(const std::string& text, const VariableFrame& full)
        : tokens_(lex(text)), full_(full) {}

    Poly run() {
        Poly p = expr();
        const Token& t = peek();
        if (t.kind != Tok::End) {
            if (t.kind == Tok::Ident || t.kind == Tok::Number || t.kind == Tok::LParen)
                throw ParseError(t.pos, "unexpected '" + describe(t) +
                                            "'; implicit multiplication is not allowed, use '*'");
            throw ParseError(t.pos, "unexpected '" + describe(t) + "'");
        }
        return p;
    }

    const std::vector<bool>& used() const { return used_; }

private:
    std::vector<Token> tokens_;
    std::size_t at_ = 0;
    VariableFrame full_;
    std::vector<bool> used_ = std::vector<bool>(full_.arity(), false);

    const Token& peek() const { return tokens_[at_]; }
    const Token& advance() { return tokens_[at_++]; }
    bool accept(Tok k) {
        if (peek().kind == k) {
            ++at_;
            return true;
        }
        return false;
    }

    static std::string describe(const Token& t) {
        return t.kind == Tok::End ? "end of input" : t.text;
    }

    Poly expr() {
        Poly acc = term();
        while (true) {
            if (accept(Tok::Plus))
                acc = poly_add(acc, term());
            else if (accept(Tok::Minus))
                acc = poly_add(acc, poly_neg(term()));
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        std::size_t pos = peek().pos;
        while (accept(Tok::Star)) acc = poly_mul(acc, factor(), pos);
        return acc;
    }

    Poly factor() {
        if (accept(Tok::Minus)) return poly_neg(factor());
        return power();
    }

    Poly power() {
        Poly base = atom();
        if (accept(Tok::Caret)) {
            const Token& t = peek();
            if (t.kind != Tok::Number)
                throw ParseError(t.pos, "expected a nonnegative integer exponent after '^'");
            advance();
            unsigned long n = 0;
            try {
                n = std::stoul(t.text);
            } catch (...) {
                throw ParseError(t.pos, "exponent too large");
            }
            if (n > kMaxExponent) throw ParseError(t.pos, "exponent too large");
            return poly_pow(base, n, full_.arity(), t.pos);
        }
        return base;
    }

    Poly atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Number: {
                advance();
                mpz_class num(t.text);
                if (accept(Tok::Slash)) {
                    const Token& dtok = peek();
                    if (dtok.kind != Tok::Number)
                        throw ParseError(dtok.pos, "expected an integer denominator after '/'");
                    advance();
                    mpz_class den(dtok.text);
                    if (den == 0) throw ParseError(dtok.pos, "zero denominator");
                    Rational q(num, den);
                    q.canonicalize();
                    return Poly::constant(full_.arity(), GaussianRational(q));
                }
                return Poly::constant(full_.arity(), GaussianRational(Rational(num)));
            }
            case Tok::Ident: {
                advance();
                if (t.text == "i") {
                    return Poly::constant(full_.arity(), GaussianRational::i());
                }
                auto idx = full_.find_var(t.text);
                if (!idx) throw ParseError(t.pos, "unknown variable '" + t.text + "'");
                used_[*idx] = true;
                Poly p;
                Exponent e(full_.arity(), 0);
                e[*idx] = 1;
                p.terms.emplace(std::move(e), GaussianRational(1));
                return p;
            }
            case Tok::LParen: {
                advance();
                Poly p = expr();
                if (!accept(Tok::RParen))
                    throw ParseError(peek().pos, "expected ')'");
                return p;
            }
            case Tok::Minus:
                // unary minus is handled by factor(); reaching it here means
                // something like "2 ^ -1"
                throw ParseError(t.pos, "unexpected '-'");
            default:
                throw ParseError(t.pos, "expected a number, variable, or '('");
        }
    }
};

} // namespace

TruncatedSeries parse_expression(const std::string& text, int m, int d, int precision,
                                 const ParseOptions& options) {
    VariableFrame full(FrameKind::Full, m, d);
    Parser parser(text, full);
    Poly poly = parser.run();

    // Which variable blocks appear decides the inferred frame.
    bool uses_zeta = false, uses_xi = false, uses_t = false;
    for (std::size_t i = 0; i < full.arity(); ++i) {
        if (!parser.used()[i]) continue;
        if (i >= full.xi_offset())
            uses_xi = true;
        else if (i >= full.zeta_offset())
            uses_zeta = true;
        else
            uses_t = true;
    }

    FrameKind kind;
    if (options.frame) {
        kind = *options.frame;
        bool ok = true;
        switch (kind) {
            case FrameKind::T: ok = !uses_zeta && !uses_xi; break;
            case FrameKind::Tau: ok = !uses_t; break;
            case FrameKind::Intrinsic: ok = !uses_xi; break;
            case FrameKind::Full: ok = true; break;
        }
        if (!ok) {
            for (std::size_t i = 0; i < full.arity(); ++i) {
                if (!parser.used()[i]) continue;
                VariableFrame want(kind, m, d);
                if (!want.find_var(full.var_name(i)))
                    throw ParseError(0, "variable '" + full.var_name(i) +
                                            "' is not part of frame " + want.describe());
            }
        }
    } else {
        if (uses_xi)
            kind = uses_t ? FrameKind::Full : FrameKind::Tau;
        else if (uses_zeta)
            kind = FrameKind::Intrinsic;
        else
            kind = FrameKind::T;
    }
    VariableFrame frame(kind, m, d);

    // Degree gate, then conversion (with optional truncation).
    std::vector<std::pair<Exponent, GaussianRational>> terms;
    for (const auto& [e, c] : poly.terms) {
        if (total_degree(e) >= static_cast<std::uint64_t>(precision)) {
            if (!options.allow_truncation)
                throw ParseError(0, "expression degree " + std::to_string(total_degree(e)) +
                                        " is not below the precision order " +
                                        std::to_string(precision));
            continue;
        }
        terms.emplace_back(e, c);
    }
    TruncatedSeries in_full = TruncatedSeries::from_terms(full, precision, std::move(terms));
    return reframe(in_full, frame);
}

} // namespace crmin
