#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

#include "symfunc.hpp"

namespace lmchar {

using PartitionPair = std::pair<Partition, Partition>;
using BiSchurExpansion = std::map<PartitionPair, RationalPoly, std::greater<PartitionPair>>;

// Two-alphabet symmetric function keyed by (x cycle type, y cycle type).
// The x alphabet only ever carries an S2 action, so x partitions in the
// support have weight 0 or 2.
class BiSymFunc {
  public:
    using TermMap = std::map<PartitionPair, RationalPoly, std::greater<PartitionPair>>;

    BiSymFunc() = default;
    BiSymFunc(int c) : BiSymFunc(RationalPoly(c)) {}
    BiSymFunc(const Rational& c) : BiSymFunc(RationalPoly(c)) {}
    BiSymFunc(const RationalPoly& scalar) {
        if (!scalar.is_zero()) terms_[{Partition{}, Partition{}}] = scalar;
    }

    // p_x^x · f, for an x cycle type of weight 2
    static BiSymFunc from_parts(const Partition& x, const SymFunc& f) {
        if (x.weight() != 2) throw std::invalid_argument("x cycle type must have weight 2");
        BiSymFunc out;
        for (const auto& [la, c] : f.terms()) out.terms_[{x, la}] = c;
        return out;
    }

    const TermMap& terms() const { return terms_; }
    RationalPoly coeff(const Partition& x, const Partition& y) const {
        auto it = terms_.find({x, y});
        return it == terms_.end() ? RationalPoly() : it->second;
    }
    // Coefficient of p_x^x as a function of y alone.
    SymFunc x_component(const Partition& x) const {
        SymFunc out;
        for (const auto& [key, c] : terms_)
            if (key.first == x) out.add_term(key.second, c);
        return out;
    }
    bool is_zero() const { return terms_.empty(); }
    std::optional<unsigned> uniform_y_weight() const {
        std::optional<unsigned> w;
        for (const auto& [key, c] : terms_) {
            if (!w)
                w = key.second.weight();
            else if (*w != key.second.weight())
                return std::nullopt;
        }
        return w;
    }
    bool is_y_homogeneous(unsigned n) const {
        for (const auto& [key, c] : terms_)
            if (key.second.weight() != n) return false;
        return true;
    }

    void add_term(const PartitionPair& key, const RationalPoly& c) {
        if (c.is_zero()) return;
        if (key.first.weight() != 0 && key.first.weight() != 2)
            throw std::invalid_argument("x cycle type must have weight 0 or 2");
        auto [it, fresh] = terms_.try_emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BiSymFunc& operator+=(const BiSymFunc& o) {
        for (const auto& [key, c] : o.terms_) add_term(key, c);
        return *this;
    }
    BiSymFunc& operator-=(const BiSymFunc& o) {
        for (const auto& [key, c] : o.terms_) add_term(key, -c);
        return *this;
    }
    BiSymFunc& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& [key, v] : terms_) v *= c;
        }
        return *this;
    }
    BiSymFunc& operator*=(const RationalPoly& p) {
        if (p.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [key, v] : terms_) v = v * p;
        }
        return *this;
    }

    friend BiSymFunc operator+(BiSymFunc a, const BiSymFunc& b) { return a += b; }
    friend BiSymFunc operator-(BiSymFunc a, const BiSymFunc& b) { return a -= b; }
    friend BiSymFunc operator*(BiSymFunc a, const Rational& c) { return a *= c; }
    friend BiSymFunc operator*(const Rational& c, BiSymFunc a) { return a *= c; }
    friend BiSymFunc operator*(BiSymFunc a, const RationalPoly& p) { return a *= p; }
    friend BiSymFunc operator*(const RationalPoly& p, BiSymFunc a) { return a *= p; }

    bool operator==(const BiSymFunc&) const = default;

  private:
    TermMap terms_;
};

// Schur coefficients (λ_x, λ_y) ↦ Σ a(q) χ^{λ_x}(ν_x) χ^{λ_y}(ν_y).
// The y weight must be uniform across the support.
inline BiSchurExpansion bi_to_schur(const BiSymFunc& f) {
    BiSchurExpansion out;
    if (f.is_zero()) return out;
    const auto n = f.uniform_y_weight();
    if (!n) throw std::invalid_argument("non-homogeneous symmetric function in y");
    bool x_weight_present[2] = {false, false};
    for (const auto& [key, c] : f.terms()) x_weight_present[key.first.weight() / 2] = true;
    for (unsigned half = 0; half < 2; ++half) {
        if (!x_weight_present[half]) continue;
        const unsigned wx = 2 * half;
        for (const auto& lax : partitions_of(wx)) {
            for (const auto& lay : partitions_of(*n)) {
                RationalPoly c;
                for (const auto& [key, a] : f.terms()) {
                    if (key.first.weight() != wx) continue;
                    c += a * Rational(character(lax, key.first) * character(lay, key.second));
                }
                if (!c.is_zero()) out.emplace(PartitionPair{lax, lay}, std::move(c));
            }
        }
    }
    return out;
}

inline BiSymFunc bi_from_schur(const BiSchurExpansion& e) {
    BiSymFunc out;
    for (const auto& [key, c] : e) {
        const SymFunc sx = schur(key.first);
        const SymFunc sy = schur(key.second);
        for (const auto& [nux, cx] : sx.terms())
            for (const auto& [nuy, cy] : sy.terms()) out.add_term({nux, nuy}, cx * cy * c);
    }
    return out;
}

// 2 · n! · [p_{(1,1)}^x p_{(1^n)}^y] — the graded dimension.
inline RationalPoly bi_dimension(const BiSymFunc& f, unsigned n) {
    if (!f.is_y_homogeneous(n))
        throw std::invalid_argument("bi_dimension requires y-homogeneity of the given weight");
    RationalPoly c = f.coeff(Partition{1, 1}, Partition(std::vector<unsigned>(n, 1u)));
    c *= Rational(2 * factorial(n));
    return c;
}

inline BiSymFunc specialize_q(const BiSymFunc& f, const Rational& v) {
    BiSymFunc out;
    for (const auto& [key, c] : f.terms()) out.add_term(key, RationalPoly(c.evaluate(v)));
    return out;
}

}  // namespace lmchar
