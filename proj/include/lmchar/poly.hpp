#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "rational.hpp"

namespace lmchar {

// Univariate polynomial in q over the exact rationals, stored sparsely as
// exponent -> coefficient with no zero entries kept.
class RationalPoly {
  public:
    RationalPoly() = default;  // the zero polynomial
    RationalPoly(int c) : RationalPoly(Rational(c)) {}
    RationalPoly(const Rational& c) {
        if (c != 0) coef_[0] = c;
    }

    static RationalPoly monomial(unsigned exp, const Rational& c = 1) {
        RationalPoly p;
        if (c != 0) p.coef_[exp] = c;
        return p;
    }
    static RationalPoly q() { return monomial(1); }
    // q^lo + q^{lo+1} + ... + q^hi; zero when hi < lo
    static RationalPoly geometric(unsigned lo, unsigned hi) {
        RationalPoly p;
        for (unsigned e = lo; e <= hi; ++e) p.coef_[e] = 1;
        return p;
    }

    bool is_zero() const { return coef_.empty(); }
    // The zero polynomial reports degree -1.
    int degree() const { return coef_.empty() ? -1 : static_cast<int>(coef_.rbegin()->first); }
    Rational coeff(unsigned exp) const {
        auto it = coef_.find(exp);
        return it == coef_.end() ? Rational(0) : it->second;
    }
    const std::map<unsigned, Rational>& terms() const { return coef_; }

    RationalPoly& operator+=(const RationalPoly& o) {
        for (const auto& [e, c] : o.coef_) {
            auto [it, fresh] = coef_.try_emplace(e, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) coef_.erase(it);
            }
        }
        return *this;
    }
    RationalPoly& operator-=(const RationalPoly& o) {
        for (const auto& [e, c] : o.coef_) {
            auto [it, fresh] = coef_.try_emplace(e, -c);
            if (!fresh) {
                it->second -= c;
                if (it->second == 0) coef_.erase(it);
            }
        }
        return *this;
    }
    RationalPoly operator-() const {
        RationalPoly r = *this;
        for (auto& [e, c] : r.coef_) c = -c;
        return r;
    }
    RationalPoly& operator*=(const Rational& c) {
        if (c == 0) {
            coef_.clear();
        } else {
            for (auto& [e, v] : coef_) v *= c;
        }
        return *this;
    }
    RationalPoly& operator*=(const RationalPoly& o) { return *this = *this * o; }

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
        RationalPoly r;
        for (const auto& [ea, ca] : a.coef_)
            for (const auto& [eb, cb] : b.coef_) {
                auto [it, fresh] = r.coef_.try_emplace(ea + eb, ca * cb);
                if (!fresh) it->second += ca * cb;
            }
        r.trim();
        return r;
    }
    friend RationalPoly operator*(RationalPoly a, const Rational& c) { return a *= c; }
    friend RationalPoly operator*(const Rational& c, RationalPoly a) { return a *= c; }

    bool operator==(const RationalPoly&) const = default;

    Rational evaluate(const Rational& v) const {
        Rational acc = 0;
        for (const auto& [e, c] : coef_) {
            Rational pw = 1;
            for (unsigned i = 0; i < e; ++i) pw *= v;
            acc += c * pw;
        }
        return acc;
    }

    // substitution q -> q^r
    RationalPoly exponents_scaled(unsigned r) const {
        RationalPoly out;
        for (const auto& [e, c] : coef_) out.coef_[e * r] = c;
        return out;
    }

    // q^d * p(1/q); requires degree(p) <= d
    RationalPoly reversed(unsigned d) const {
        if (degree() > static_cast<int>(d))
            throw std::invalid_argument("reversal degree below polynomial degree");
        RationalPoly out;
        for (const auto& [e, c] : coef_) out.coef_[d - e] = c;
        return out;
    }
    // q^d * p(-1/q)
    RationalPoly reversed_signed(unsigned d) const {
        if (degree() > static_cast<int>(d))
            throw std::invalid_argument("reversal degree below polynomial degree");
        RationalPoly out;
        for (const auto& [e, c] : coef_) out.coef_[d - e] = (e % 2 == 0) ? c : -c;
        return out;
    }

    bool integer_coefficients() const {
        for (const auto& [e, c] : coef_)
            if (denominator(c) != 1) return false;
        return true;
    }
    bool nonnegative_integer_coefficients() const {
        for (const auto& [e, c] : coef_)
            if (denominator(c) != 1 || c < 0) return false;
        return true;
    }
    // coeff(i) == coeff(d - i) for all 0 <= i <= d
    bool palindromic(unsigned d) const {
        if (degree() > static_cast<int>(d)) return false;
        for (unsigned i = 0; i <= d; ++i)
            if (coeff(i) != coeff(d - i)) return false;
        return true;
    }

  private:
    void trim() {
        for (auto it = coef_.begin(); it != coef_.end();) {
            if (it->second == 0)
                it = coef_.erase(it);
            else
                ++it;
        }
    }

    std::map<unsigned, Rational> coef_;
};

// Exact division in Q[q]; nullopt when den == 0 or the remainder is nonzero.
inline std::optional<RationalPoly> divide_exact(RationalPoly num, const RationalPoly& den) {
    if (den.is_zero()) return std::nullopt;
    const int dd = den.degree();
    const Rational dlead = den.coeff(static_cast<unsigned>(dd));
    RationalPoly quot;
    while (!num.is_zero() && num.degree() >= dd) {
        const unsigned e = static_cast<unsigned>(num.degree() - dd);
        RationalPoly t =
            RationalPoly::monomial(e, num.coeff(static_cast<unsigned>(num.degree())) / dlead);
        quot += t;
        num -= t * den;
    }
    if (!num.is_zero()) return std::nullopt;
    return quot;
}

}  // namespace lmchar
