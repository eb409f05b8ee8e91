#include "crmin/exponent.hpp"

#include <algorithm>

#include "crmin/errors.hpp"

namespace crmin {

std::uint64_t total_degree(const Exponent& e) {
    std::uint64_t deg = 0;
    for (auto p : e) deg += p;
    return deg;
}

Ordering grlex_cmp(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size())
        throw ValidationError("grlex comparison across different arities");
    std::uint64_t da = total_degree(a), db = total_degree(b);
    if (da != db)
        return da < db ? Ordering::Less : Ordering::Greater;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i])
            return a[i] > b[i] ? Ordering::Less : Ordering::Greater;
    }
    return Ordering::Equal;
}

Exponent exponent_sum(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size())
        throw ValidationError("exponent sum across different arities");
    Exponent r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

std::vector<Exponent> enumerate_exponents(std::size_t arity, std::uint32_t max_degree) {
    std::vector<Exponent> out;
    Exponent cur(arity, 0);
    // Fill positions left to right, spending at most `left` total degree.
    auto rec = [&](auto&& self, std::size_t pos, std::uint32_t left) -> void {
        if (pos == arity) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t p = 0; p <= left; ++p) {
            cur[pos] = p;
            self(self, pos + 1, left - p);
        }
        cur[pos] = 0;
    };
    for (std::uint32_t deg = 0; deg <= max_degree; ++deg) {
        std::size_t start = out.size();
        rec(rec, 0, deg);
        // rec enumerates all degrees <= deg; keep only the new exact-degree ones.
        out.erase(std::remove_if(out.begin() + start, out.end(),
                                 [&](const Exponent& e) { return total_degree(e) != deg; }),
                  out.end());
        std::sort(out.begin() + start, out.end(), GrlexLess{});
    }
    return out;
}

} // namespace crmin
