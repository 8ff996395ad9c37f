#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace lmchar {

// Weakly decreasing sequence of positive integers; the empty sequence is the
// unique partition of 0. Constructors sort and drop zero parts, so every
// Partition is canonical.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<unsigned> parts) : parts_(parts) { normalize(); }
    explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) { normalize(); }

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned length() const { return static_cast<unsigned>(parts_.size()); }
    unsigned weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }
    bool empty() const { return parts_.empty(); }

    // m_k: number of parts equal to k
    unsigned multiplicity(unsigned k) const {
        return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), k));
    }

    auto operator<=>(const Partition&) const = default;

  private:
    void normalize() {
        std::sort(parts_.begin(), parts_.end(), std::greater<unsigned>());
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    std::vector<unsigned> parts_;
};

namespace detail {

inline void emit_partitions(unsigned n, unsigned max_part, std::vector<unsigned>& prefix,
                            std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (unsigned k = std::min(n, max_part); k >= 1; --k) {
        prefix.push_back(k);
        emit_partitions(n - k, k, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

// All partitions of n, lexicographically descending: (n) first, (1^n) last.
inline std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> prefix;
    detail::emit_partitions(n, n, prefix, out);
    return out;
}

// c_λ: number of distinct orderings of the parts, l(λ)! / Π_k m_k(λ)!
inline Int num_ordered(const Partition& la) {
    Int r = factorial(la.length());
    const auto& p = la.parts();
    std::size_t i = 0;
    while (i < p.size()) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        r /= factorial(static_cast<unsigned>(j - i));
        i = j;
    }
    return r;
}

// z_μ = Π_k k^{m_k} m_k!, the order of the centralizer of a permutation of
// cycle type μ.
inline Int centralizer_order(const Partition& mu) {
    Int z = 1;
    const auto& p = mu.parts();
    std::size_t i = 0;
    while (i < p.size()) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        unsigned m = static_cast<unsigned>(j - i);
        for (unsigned t = 0; t < m; ++t) z *= p[i];
        z *= factorial(m);
        i = j;
    }
    return z;
}

// Multiset union: m_k(λ+μ) = m_k(λ) + m_k(μ).
inline Partition add(const Partition& a, const Partition& b) {
    std::vector<unsigned> parts;
    parts.reserve(a.parts().size() + b.parts().size());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(parts), std::greater<unsigned>());
    return Partition(std::move(parts));
}

inline Partition operator+(const Partition& a, const Partition& b) { return add(a, b); }

// Every part multiplied by r; the support of p_r ∘ p_λ.
inline Partition stretch(unsigned r, const Partition& la) {
    if (r == 0) throw std::invalid_argument("stretch factor must be >= 1");
    std::vector<unsigned> parts = la.parts();
    for (auto& p : parts) p *= r;
    return Partition(std::move(parts));
}

}  // namespace lmchar
