#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "symfunc.hpp"

namespace lmchar {

// Truncated formal power series in t whose degree-n coefficient is a
// weight-n symmetric function. The variable t is never stored: the weight
// grading is the t-degree. Mixed truncations take the minimum.
class SymFuncSeries {
  public:
    explicit SymFuncSeries(unsigned truncation) : coeffs_(truncation + 1) {}
    static SymFuncSeries unit(unsigned truncation) {
        SymFuncSeries s(truncation);
        s.coeffs_[0] = SymFunc::one();
        return s;
    }

    unsigned truncation() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const SymFunc& coeff(unsigned n) const { return coeffs_.at(n); }
    void set_coeff(unsigned n, SymFunc f) {
        if (n >= coeffs_.size()) throw std::out_of_range("degree beyond truncation");
        if (!f.is_homogeneous(n))
            throw std::invalid_argument("series coefficient not homogeneous of its degree");
        coeffs_[n] = std::move(f);
    }

    bool operator==(const SymFuncSeries&) const = default;

  private:
    std::vector<SymFunc> coeffs_;
};

inline SymFuncSeries operator+(const SymFuncSeries& a, const SymFuncSeries& b) {
    const unsigned n = std::min(a.truncation(), b.truncation());
    SymFuncSeries r(n);
    for (unsigned i = 0; i <= n; ++i) r.set_coeff(i, a.coeff(i) + b.coeff(i));
    return r;
}

inline SymFuncSeries operator-(const SymFuncSeries& a, const SymFuncSeries& b) {
    const unsigned n = std::min(a.truncation(), b.truncation());
    SymFuncSeries r(n);
    for (unsigned i = 0; i <= n; ++i) r.set_coeff(i, a.coeff(i) - b.coeff(i));
    return r;
}

// Cauchy product up to the shared truncation.
inline SymFuncSeries operator*(const SymFuncSeries& a, const SymFuncSeries& b) {
    const unsigned n = std::min(a.truncation(), b.truncation());
    SymFuncSeries r(n);
    for (unsigned d = 0; d <= n; ++d) {
        SymFunc acc;
        for (unsigned i = 0; i <= d; ++i) acc += a.coeff(i) * b.coeff(d - i);
        r.set_coeff(d, std::move(acc));
    }
    return r;
}

// Scalar polynomial multiplies every coefficient (weights unchanged).
inline SymFuncSeries operator*(const SymFuncSeries& a, const RationalPoly& p) {
    SymFuncSeries r(a.truncation());
    for (unsigned i = 0; i <= a.truncation(); ++i) r.set_coeff(i, a.coeff(i) * p);
    return r;
}
inline SymFuncSeries operator*(const RationalPoly& p, const SymFuncSeries& a) { return a * p; }

// Multiplicative inverse; requires the constant term to be a nonzero
// rational constant.
inline SymFuncSeries inverse(const SymFuncSeries& a) {
    const RationalPoly c0 = a.coeff(0).coeff(Partition{});
    if (c0.degree() != 0) throw std::domain_error("non-unit constant term");
    const Rational c = c0.coeff(0);
    SymFuncSeries b(a.truncation());
    b.set_coeff(0, SymFunc(Rational(1) / c));
    for (unsigned n = 1; n <= a.truncation(); ++n) {
        SymFunc acc;
        for (unsigned j = 1; j <= n; ++j) acc += a.coeff(j) * b.coeff(n - j);
        acc *= Rational(-1) / c;
        b.set_coeff(n, std::move(acc));
    }
    return b;
}

namespace detail {

inline SymFunc divide_by_scalar_poly(const SymFunc& f, const RationalPoly& d) {
    SymFunc out;
    for (const auto& [la, c] : f.terms()) {
        auto q = divide_exact(c, d);
        if (!q) throw std::domain_error("non-exact series division");
        out.add_term(la, *q);
    }
    return out;
}

}  // namespace detail

// Quotient solved degree by degree; every polynomial division by the
// denominator's constant term must be exact, otherwise the identity being
// expanded is malformed and we fail loudly.
inline SymFuncSeries divide(const SymFuncSeries& num, const SymFuncSeries& den) {
    const unsigned n = std::min(num.truncation(), den.truncation());
    const RationalPoly d = den.coeff(0).coeff(Partition{});
    if (d.is_zero()) throw std::domain_error("non-exact series division");
    SymFuncSeries quot(n);
    for (unsigned deg = 0; deg <= n; ++deg) {
        SymFunc rem = num.coeff(deg);
        for (unsigned j = 1; j <= deg; ++j) rem -= den.coeff(j) * quot.coeff(deg - j);
        quot.set_coeff(deg, detail::divide_by_scalar_poly(rem, d));
    }
    return quot;
}

// t -> qt: the degree-n coefficient picks up q^n.
inline SymFuncSeries scale_t_by_q(const SymFuncSeries& a) {
    SymFuncSeries r(a.truncation());
    for (unsigned i = 0; i <= a.truncation(); ++i)
        r.set_coeff(i, a.coeff(i) * RationalPoly::monomial(i));
    return r;
}

}  // namespace lmchar
