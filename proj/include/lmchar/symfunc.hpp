#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "characters.hpp"
#include "partition.hpp"
#include "poly.hpp"

namespace lmchar {

// Schur-basis coefficients, ordered lexicographically descending.
using SchurExpansion = std::map<Partition, RationalPoly, std::greater<Partition>>;

// Symmetric function over Q[q] in the power-sum basis: a finitely supported
// map partition -> coefficient polynomial. The Schur basis is a view
// produced by to_schur.
class SymFunc {
  public:
    using TermMap = std::map<Partition, RationalPoly, std::greater<Partition>>;

    SymFunc() = default;
    SymFunc(int c) : SymFunc(RationalPoly(c)) {}
    SymFunc(const Rational& c) : SymFunc(RationalPoly(c)) {}
    SymFunc(const RationalPoly& scalar) {
        if (!scalar.is_zero()) terms_[Partition{}] = scalar;
    }

    static SymFunc one() { return SymFunc(1); }
    static SymFunc power_sum(const Partition& la) {
        SymFunc f;
        f.terms_[la] = RationalPoly(1);
        return f;
    }

    const TermMap& terms() const { return terms_; }
    RationalPoly coeff(const Partition& la) const {
        auto it = terms_.find(la);
        return it == terms_.end() ? RationalPoly() : it->second;
    }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous(unsigned n) const {
        for (const auto& [la, c] : terms_)
            if (la.weight() != n) return false;
        return true;
    }
    // The common weight of the support; nullopt when zero or mixed.
    std::optional<unsigned> uniform_weight() const {
        std::optional<unsigned> w;
        for (const auto& [la, c] : terms_) {
            if (!w)
                w = la.weight();
            else if (*w != la.weight())
                return std::nullopt;
        }
        return w;
    }

    void add_term(const Partition& la, const RationalPoly& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(la, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SymFunc& operator+=(const SymFunc& o) {
        for (const auto& [la, c] : o.terms_) add_term(la, c);
        return *this;
    }
    SymFunc& operator-=(const SymFunc& o) {
        for (const auto& [la, c] : o.terms_) add_term(la, -c);
        return *this;
    }
    SymFunc operator-() const {
        SymFunc r;
        for (const auto& [la, c] : terms_) r.terms_[la] = -c;
        return r;
    }
    SymFunc& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [la, v] : terms_) v *= c;
        }
        return *this;
    }
    SymFunc& operator*=(const RationalPoly& p) {
        if (p.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [la, v] : terms_) v = v * p;
        }
        return *this;
    }

    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    // Induction product: bilinear, p_λ · p_μ = p_{λ+μ}.
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b) {
        SymFunc r;
        for (const auto& [la, ca] : a.terms_)
            for (const auto& [mu, cb] : b.terms_) r.add_term(la + mu, ca * cb);
        return r;
    }
    friend SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
    friend SymFunc operator*(const Rational& c, SymFunc a) { return a *= c; }
    friend SymFunc operator*(SymFunc a, const RationalPoly& p) { return a *= p; }
    friend SymFunc operator*(const RationalPoly& p, SymFunc a) { return a *= p; }

    bool operator==(const SymFunc&) const = default;

  private:
    TermMap terms_;
};

// p_r ∘ f: the ring homomorphism determined by p_m -> p_{rm}, q -> q^r.
inline SymFunc plethysm_power_sum(unsigned r, const SymFunc& f) {
    if (r == 0) throw std::invalid_argument("plethysm index must be >= 1");
    SymFunc out;
    for (const auto& [la, c] : f.terms()) out.add_term(stretch(r, la), c.exponents_scaled(r));
    return out;
}

// s_λ = Σ_{μ ⊢ |λ|} χ^λ(μ)/z_μ · p_μ
inline SymFunc schur(const Partition& la) {
    SymFunc out;
    for (const auto& mu : partitions_of(la.weight())) {
        const long long chi = character(la, mu);
        if (chi != 0) out.add_term(mu, RationalPoly(Rational(Int(chi), centralizer_order(mu))));
    }
    return out;
}

// Schur coefficients of a homogeneous f: λ ↦ Σ_μ a_μ(q) χ^λ(μ).
inline SchurExpansion to_schur(const SymFunc& f) {
    SchurExpansion out;
    if (f.is_zero()) return out;
    const auto w = f.uniform_weight();
    if (!w) throw std::invalid_argument("non-homogeneous symmetric function");
    for (const auto& la : partitions_of(*w)) {
        RationalPoly c;
        for (const auto& [mu, a] : f.terms()) c += a * Rational(character(la, mu));
        if (!c.is_zero()) out.emplace(la, std::move(c));
    }
    return out;
}

inline SymFunc from_schur(const SchurExpansion& e) {
    SymFunc f;
    for (const auto& [la, c] : e) f += schur(la) * c;
    return f;
}

// s_{(n-i, 1^i)}
inline SymFunc hook_schur(unsigned n, unsigned i) {
    if (n == 0 || i >= n) throw std::invalid_argument("hook leg out of range");
    std::vector<unsigned> parts{n - i};
    parts.insert(parts.end(), i, 1u);
    return schur(Partition(std::move(parts)));
}

// h_r = Σ_{μ ⊢ r} p_μ / z_μ; h_0 = 1
inline SymFunc complete_h(unsigned r) {
    SymFunc out;
    for (const auto& mu : partitions_of(r))
        out.add_term(mu, RationalPoly(Rational(1, centralizer_order(mu))));
    return out;
}

// n! · [p_{(1^n)}] f — the graded dimension of the underlying representation.
inline RationalPoly dimension(const SymFunc& f, unsigned n) {
    if (!f.is_homogeneous(n))
        throw std::invalid_argument("dimension requires a function homogeneous of the given weight");
    RationalPoly c = f.coeff(Partition(std::vector<unsigned>(n, 1u)));
    c *= Rational(factorial(n));
    return c;
}

inline SymFunc specialize_q(const SymFunc& f, const Rational& v) {
    SymFunc out;
    for (const auto& [la, c] : f.terms()) out.add_term(la, RationalPoly(c.evaluate(v)));
    return out;
}

// q^d f(1/q) and q^d f(-1/q), applied to every coefficient polynomial.
inline SymFunc reverse_q(const SymFunc& f, unsigned d) {
    SymFunc out;
    for (const auto& [la, c] : f.terms()) out.add_term(la, c.reversed(d));
    return out;
}

inline SymFunc reverse_q_signed(const SymFunc& f, unsigned d) {
    SymFunc out;
    for (const auto& [la, c] : f.terms()) out.add_term(la, c.reversed_signed(d));
    return out;
}

}  // namespace lmchar
