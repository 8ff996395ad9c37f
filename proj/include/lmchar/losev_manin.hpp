#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bisymfunc.hpp"
#include "series.hpp"
#include "symfunc.hpp"

namespace lmchar {

// Σ_{i=0}^{n-1} (-1)^i s_{(n-i,1^i)} q^{n-1-i}: the signed compactly
// supported class of the open torus stratum, y alphabet only.
inline SymFunc signed_hook_sum(unsigned n) {
    if (n == 0) throw std::invalid_argument("signed hook sum undefined at n = 0");
    SymFunc out;
    for (unsigned i = 0; i < n; ++i) {
        const Rational sign = (i % 2 == 0) ? 1 : -1;
        out += hook_schur(n, i) * RationalPoly::monomial(n - 1 - i, sign);
    }
    return out;
}

// Σ_{i=0}^{n-1} s_{(n-i,1^i)} q^{n-1-i}; equals 1 at n = 0.
inline SymFunc hook_sum(unsigned n) {
    if (n == 0) return SymFunc::one();
    SymFunc out;
    for (unsigned i = 0; i < n; ++i) out += hook_schur(n, i) * RationalPoly::monomial(n - 1 - i);
    return out;
}

// Product of signed hook sums over the parts; 1 on the empty partition.
inline SymFunc signed_hook_product(const Partition& la) {
    SymFunc out = SymFunc::one();
    for (unsigned p : la.parts()) out = out * signed_hook_sum(p);
    return out;
}

// ½ (p_1^x)^2 f_n + ½ p_2^x g_n: the signed compact-support equivariant
// class of the locus of irreducible curves.
inline BiSymFunc open_stratum_class(unsigned n) {
    if (n == 0) throw std::invalid_argument("n must be >= 1");
    BiSymFunc cls = BiSymFunc::from_parts(Partition{1, 1}, signed_hook_sum(n)) * Rational(1, 2);
    cls += BiSymFunc::from_parts(Partition{2}, hook_sum(n)) * Rational(1, 2);
    return cls;
}

// The closed formula for the bigraded equivariant polynomial:
//   ½ (p_1^x)^2 Σ_{λ⊢n} c_λ F_λ
// + ½ p_2^x Σ_{k=0}^{⌊n/2⌋} g_{n-2k} Σ_{μ⊢k} c_μ (p_2 ∘ F_μ).
inline BiSymFunc equivariant_poincare(unsigned n) {
    if (n == 0) throw std::invalid_argument("n must be >= 1");
    SymFunc sym_half;
    for (const auto& la : partitions_of(n))
        sym_half += signed_hook_product(la) * Rational(num_ordered(la));
    SymFunc alt_half;
    for (unsigned k = 0; 2 * k <= n; ++k) {
        SymFunc inner;
        for (const auto& mu : partitions_of(k))
            inner += plethysm_power_sum(2, signed_hook_product(mu)) * Rational(num_ordered(mu));
        alt_half += hook_sum(n - 2 * k) * inner;
    }
    BiSymFunc e = BiSymFunc::from_parts(Partition{1, 1}, sym_half) * Rational(1, 2);
    e += BiSymFunc::from_parts(Partition{2}, alt_half) * Rational(1, 2);
    return e;
}

// The two power-sum x-components of the generating series; at degree n >= 1
// the bivariate value is ½ p_{(1,1)}^x sym[n] + ½ p_{(2)}^x alt[n], and the
// constant term is the scalar 1.
struct EquivariantSeries {
    SymFuncSeries sym;  // multiplies (p_1^x)^2 / 2
    SymFuncSeries alt;  // multiplies p_2^x / 2

    unsigned truncation() const { return std::min(sym.truncation(), alt.truncation()); }
    BiSymFunc at(unsigned n) const {
        if (n == 0) return BiSymFunc(1);
        BiSymFunc e = BiSymFunc::from_parts(Partition{1, 1}, sym.coeff(n)) * Rational(1, 2);
        e += BiSymFunc::from_parts(Partition{2}, alt.coeff(n)) * Rational(1, 2);
        return e;
    }
};

// Series form: ½(p_1^x)^2 (1-Σf_n)^{-1} + ½p_2^x (1+Σg_n)(1-Σ p_2∘f_n)^{-1},
// with p_2 ∘ f_n sitting at t-degree 2n.
inline EquivariantSeries equivariant_poincare_series(unsigned max_n) {
    SymFuncSeries signed_sum(max_n);
    SymFuncSeries plain_sum(max_n);
    SymFuncSeries doubled_sum(max_n);
    for (unsigned n = 1; n <= max_n; ++n) {
        signed_sum.set_coeff(n, signed_hook_sum(n));
        plain_sum.set_coeff(n, hook_sum(n));
        if (2 * n <= max_n) doubled_sum.set_coeff(2 * n, plethysm_power_sum(2, signed_hook_sum(n)));
    }
    const SymFuncSeries unit = SymFuncSeries::unit(max_n);
    SymFuncSeries sym = inverse(unit - signed_sum);
    SymFuncSeries alt = (unit + plain_sum) * inverse(unit - doubled_sum);
    return {std::move(sym), std::move(alt)};
}

// ∂²/∂(p_1^x)² extraction: twice the coefficient of p_{(1,1)}^x.
inline SymFunc forget_s2(const BiSymFunc& e, unsigned n) {
    if (!e.is_y_homogeneous(n)) throw std::invalid_argument("incompatible weights");
    return e.x_component(Partition{1, 1}) * Rational(2);
}

// The recursion E_{S_{n+1}} = s_{(n+1)} Σ_{i=0}^{n} q^i
//   + Σ_{i=0}^{n-2} s_{(n-i)} E_{S_{i+1}} Σ_{k=1}^{n-i-1} q^k,
// base E_{S_1} = s_{(1)}. Entry 0 of the result is the scalar 1.
inline std::vector<SymFunc> procesi_recursion(unsigned max_n) {
    if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
    std::vector<SymFunc> e(max_n + 1);
    e[0] = SymFunc::one();
    e[1] = schur(Partition{1});
    for (unsigned m = 2; m <= max_n; ++m) {
        const unsigned n = m - 1;
        SymFunc val = schur(Partition{m}) * RationalPoly::geometric(0, n);
        for (unsigned i = 0; i + 2 <= n; ++i)
            val += schur(Partition{n - i}) * e[i + 1] * RationalPoly::geometric(1, n - i - 1);
        e[m] = std::move(val);
    }
    return e;
}

// One-row Hall–Littlewood polynomial P_(n)(q) = Σ_{r=0}^{n-1} (-q)^r s_{(n-r,1^r)}.
inline SymFunc hall_littlewood_row(unsigned n) {
    if (n == 0) throw std::invalid_argument("n must be >= 1");
    SymFunc out;
    for (unsigned r = 0; r < n; ++r) {
        const Rational sign = (r % 2 == 0) ? 1 : -1;
        out += hook_schur(n, r) * RationalPoly::monomial(r, sign);
    }
    return out;
}

// (1-q) H(t) / (H(qt) - q H(t)) with H(t) = Σ_{r>=0} h_r t^r. The h_0 = 1
// term is required: without it the denominator has no invertible lead and
// the division fails loudly.
inline SymFuncSeries stembridge_series(unsigned max_n) {
    SymFuncSeries h_series(max_n);
    for (unsigned r = 0; r <= max_n; ++r) h_series.set_coeff(r, complete_h(r));
    const SymFuncSeries num = h_series * (RationalPoly(1) - RationalPoly::q());
    const SymFuncSeries den = scale_t_by_q(h_series) - h_series * RationalPoly::q();
    return divide(num, den);
}

// (1 - Σ f_n t^n)^{-1}; the degree-n coefficient is E_{S_n}(q).
inline SymFuncSeries inverse_class_series(unsigned max_n) {
    SymFuncSeries s(max_n);
    for (unsigned n = 1; n <= max_n; ++n) s.set_coeff(n, signed_hook_sum(n));
    return inverse(SymFuncSeries::unit(max_n) - s);
}

// (1 - Σ p_n z^n)^{-1}; the degree-n coefficient is the equivariant Euler
// characteristic e_{S_n}.
inline SymFuncSeries euler_characteristic_series(unsigned max_n) {
    SymFuncSeries s(max_n);
    for (unsigned n = 1; n <= max_n; ++n) s.set_coeff(n, SymFunc::power_sum(Partition{n}));
    return inverse(SymFuncSeries::unit(max_n) - s);
}

// Non-equivariant graded Betti polynomial Σ dim H^{2i} q^i.
inline RationalPoly poincare_polynomial(unsigned n) {
    return bi_dimension(equivariant_poincare(n), n);
}

// A_n(q) by descent enumeration; intended for small n.
inline RationalPoly eulerian_by_descents(unsigned n) {
    if (n == 0) throw std::invalid_argument("n must be >= 1");
    if (n > 10) throw std::invalid_argument("descent enumeration limited to n <= 10");
    std::vector<unsigned> w(n);
    std::iota(w.begin(), w.end(), 1u);
    std::vector<unsigned long long> tally(n, 0);
    do {
        unsigned d = 0;
        for (unsigned i = 0; i + 1 < n; ++i)
            if (w[i] > w[i + 1]) ++d;
        ++tally[d];
    } while (std::next_permutation(w.begin(), w.end()));
    RationalPoly out;
    for (unsigned d = 0; d < n; ++d)
        if (tally[d]) out += RationalPoly::monomial(d, tally[d]);
    return out;
}

// A_n(q) via A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1).
inline RationalPoly eulerian_by_recurrence(unsigned n) {
    if (n == 0) throw std::invalid_argument("n must be >= 1");
    std::vector<Int> row{1};
    for (unsigned m = 2; m <= n; ++m) {
        std::vector<Int> next(m, 0);
        for (unsigned k = 0; k < m; ++k) {
            Int v = 0;
            if (k < row.size()) v += Int(k + 1) * row[k];
            if (k >= 1 && k - 1 < row.size()) v += Int(m - k) * row[k - 1];
            next[k] = std::move(v);
        }
        row = std::move(next);
    }
    RationalPoly out;
    for (unsigned k = 0; k < row.size(); ++k)
        if (row[k] != 0) out += RationalPoly::monomial(k, Rational(row[k]));
    return out;
}

// Descent counting up to n = 8, recurrence beyond; the overlap is asserted.
inline RationalPoly eulerian_polynomial(unsigned n) {
    RationalPoly rec = eulerian_by_recurrence(n);
    if (n <= 8 && eulerian_by_descents(n) != rec)
        throw std::logic_error("eulerian polynomial computation paths disagree");
    return rec;
}

namespace detail {

inline const std::vector<BiSchurExpansion>& golden_table() {
    static const std::vector<BiSchurExpansion> table = [] {
        std::vector<BiSchurExpansion> t(7);
        auto put = [&t](unsigned n, std::initializer_list<unsigned> x,
                        std::initializer_list<unsigned> y, std::initializer_list<int> coeffs) {
            RationalPoly p;
            unsigned e = 0;
            for (int c : coeffs) {
                if (c) p += RationalPoly::monomial(e, c);
                ++e;
            }
            t[n].emplace(PartitionPair{Partition(x), Partition(y)}, std::move(p));
        };
        put(1, {2}, {1}, {1});
        put(2, {2}, {2}, {1, 1});
        put(3, {2}, {3}, {1, 1, 1});
        put(3, {2}, {2, 1}, {0, 1});
        put(3, {1, 1}, {3}, {0, 1});
        put(4, {2}, {4}, {1, 2, 2, 1});
        put(4, {2}, {3, 1}, {0, 1, 1});
        put(4, {2}, {2, 2}, {0, 1, 1});
        put(4, {1, 1}, {4}, {0, 1, 1});
        put(4, {1, 1}, {3, 1}, {0, 1, 1});
        put(5, {2}, {5}, {1, 2, 4, 2, 1});
        put(5, {2}, {4, 1}, {0, 2, 3, 2});
        put(5, {2}, {3, 2}, {0, 1, 3, 1});
        put(5, {2}, {2, 2, 1}, {0, 0, 1});
        put(5, {1, 1}, {5}, {0, 2, 2, 2});
        put(5, {1, 1}, {4, 1}, {0, 1, 3, 1});
        put(5, {1, 1}, {3, 2}, {0, 1, 2, 1});
        put(5, {1, 1}, {3, 1, 1}, {0, 0, 1});
        put(6, {2}, {6}, {1, 3, 6, 6, 3, 1});
        put(6, {2}, {5, 1}, {0, 2, 6, 6, 2});
        put(6, {2}, {4, 2}, {0, 2, 7, 7, 2});
        put(6, {2}, {4, 1, 1}, {0, 0, 1, 1});
        put(6, {2}, {3, 3}, {0, 0, 2, 2});
        put(6, {2}, {3, 2, 1}, {0, 0, 2, 2});
        put(6, {2}, {2, 2, 2}, {0, 0, 1, 1});
        put(6, {1, 1}, {6}, {0, 2, 4, 4, 2});
        put(6, {1, 1}, {5, 1}, {0, 2, 6, 6, 2});
        put(6, {1, 1}, {4, 2}, {0, 1, 5, 5, 1});
        put(6, {1, 1}, {4, 1, 1}, {0, 0, 2, 2});
        put(6, {1, 1}, {3, 3}, {0, 1, 3, 3, 1});
        put(6, {1, 1}, {3, 2, 1}, {0, 0, 2, 2});
        return t;
    }();
    return table;
}

}  // namespace detail

// Reference Schur expansions of the equivariant polynomial for n = 1..6; the
// fixture behind the "appendix-table" verification suite.
inline const BiSchurExpansion& golden_expansion(unsigned n) {
    if (n < 1 || n > 6) throw std::out_of_range("reference expansions cover n = 1..6");
    return detail::golden_table()[n];
}

struct Check {
    std::string name;
    unsigned n = 0;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    unsigned max_n = 0;
    std::vector<Check> checks;

    bool passing() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }
};

// Truncated check of H(qt) = H(t) (1 + (q-1) Σ_r [q^{r-1} P_(r)(1/q)] t^r),
// the cleared-denominator form of the product identity relating the
// complete-symmetric generating function to the one-row Hall–Littlewood
// polynomials. Only polynomial arithmetic occurs.
inline VerificationReport hl_product_identity_check(unsigned max_order) {
    if (max_order < 1) throw std::invalid_argument("order must be >= 1");
    SymFuncSeries h_series(max_order);
    for (unsigned r = 0; r <= max_order; ++r) h_series.set_coeff(r, complete_h(r));
    const SymFuncSeries lhs = scale_t_by_q(h_series);
    const RationalPoly q_minus_1 = RationalPoly::q() - RationalPoly(1);
    SymFuncSeries correction(max_order);
    correction.set_coeff(0, SymFunc::one());
    for (unsigned r = 1; r <= max_order; ++r)
        correction.set_coeff(r, reverse_q(hall_littlewood_row(r), r - 1) * q_minus_1);
    const SymFuncSeries rhs = h_series * correction;
    VerificationReport report{"hl-product-identity", max_order, {}};
    for (unsigned n = 1; n <= max_order; ++n) {
        Check c{"hall-littlewood-product", n, lhs.coeff(n) == rhs.coeff(n), ""};
        if (!c.pass) c.detail = "series sides differ at this degree";
        report.checks.push_back(std::move(c));
    }
    return report;
}

inline const std::vector<std::string>& verification_suites() {
    static const std::vector<std::string> names = {
        "appendix-table", "procesi",         "inverse-series", "stembridge",    "eulerian",
        "euler-char",     "hall-littlewood", "palindromic",    "schur-positive"};
    return names;
}

namespace detail {

inline void run_suite(const std::string& name, unsigned max_n, std::vector<Check>& out) {
    auto record = [&out](const std::string& check_name, unsigned n, bool pass,
                         const char* detail) {
        out.push_back(Check{check_name, n, pass, pass ? std::string() : std::string(detail)});
    };
    if (name == "appendix-table") {
        for (unsigned n = 1; n <= std::min(max_n, 6u); ++n)
            record(name, n, bi_to_schur(equivariant_poincare(n)) == golden_expansion(n),
                   "Schur expansion differs from the reference table");
    } else if (name == "procesi") {
        const auto rec = procesi_recursion(max_n);
        for (unsigned n = 1; n <= max_n; ++n)
            record(name, n, forget_s2(equivariant_poincare(n), n) == rec[n],
                   "recursion disagrees with the closed formula");
    } else if (name == "inverse-series") {
        const auto ser = inverse_class_series(max_n);
        for (unsigned n = 1; n <= max_n; ++n)
            record(name, n, forget_s2(equivariant_poincare(n), n) == ser.coeff(n),
                   "series inversion disagrees with the closed formula");
    } else if (name == "stembridge") {
        const auto ser = stembridge_series(max_n);
        for (unsigned n = 1; n <= max_n; ++n)
            record(name, n, forget_s2(equivariant_poincare(n), n) == ser.coeff(n),
                   "rational-function expansion disagrees with the closed formula");
    } else if (name == "eulerian") {
        for (unsigned n = 1; n <= max_n; ++n) {
            const RationalPoly pp = poincare_polynomial(n);
            const bool ok =
                pp == eulerian_polynomial(n) && pp.evaluate(1) == Rational(factorial(n));
            record(name, n, ok, "dimension polynomial disagrees with the descent oracle");
        }
    } else if (name == "euler-char") {
        const auto rec = procesi_recursion(max_n);
        const auto ser = euler_characteristic_series(max_n);
        for (unsigned n = 1; n <= max_n; ++n)
            record(name, n, specialize_q(rec[n], 1) == ser.coeff(n),
                   "q=1 specialization disagrees with the Euler-characteristic series");
    } else if (name == "hall-littlewood") {
        for (unsigned n = 1; n <= max_n; ++n) {
            const SymFunc p = hall_littlewood_row(n);
            const bool ok = reverse_q(p, n - 1) == signed_hook_sum(n) &&
                            reverse_q_signed(p, n - 1) == hook_sum(n) &&
                            specialize_q(p, 1) == SymFunc::power_sum(Partition{n});
            record(name, n, ok, "one-row polynomial fails a reversal bridge");
        }
        for (auto& c : hl_product_identity_check(max_n).checks) out.push_back(std::move(c));
    } else if (name == "palindromic") {
        for (unsigned n = 1; n <= max_n; ++n) {
            bool ok = true;
            for (const auto& [key, c] : bi_to_schur(equivariant_poincare(n)))
                ok = ok && c.palindromic(n - 1);
            record(name, n, ok, "a Schur coefficient is not palindromic");
        }
    } else if (name == "schur-positive") {
        for (unsigned n = 1; n <= max_n; ++n) {
            bool ok = true;
            for (const auto& [key, c] : bi_to_schur(equivariant_poincare(n)))
                ok = ok && c.nonnegative_integer_coefficients();
            record(name, n, ok, "a Schur coefficient is not a nonnegative integer polynomial");
        }
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
}

}  // namespace detail

// Run the named suites for n = 1..max_n; "all" selects every suite. Records
// are emitted in a fixed (suite, n) order.
inline VerificationReport verify(unsigned max_n, const std::vector<std::string>& suites) {
    if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
    const auto& known = verification_suites();
    std::vector<bool> selected(known.size(), false);
    for (const auto& s : suites) {
        if (s == "all") {
            selected.assign(known.size(), true);
            continue;
        }
        const auto it = std::find(known.begin(), known.end(), s);
        if (it == known.end()) throw std::invalid_argument("unknown suite: " + s);
        selected[static_cast<std::size_t>(it - known.begin())] = true;
    }
    VerificationReport report;
    report.max_n = max_n;
    std::string label;
    std::size_t count = 0;
    for (std::size_t i = 0; i < known.size(); ++i) {
        if (!selected[i]) continue;
        ++count;
        if (!label.empty()) label += ",";
        label += known[i];
        detail::run_suite(known[i], max_n, report.checks);
    }
    report.suite = (count == known.size()) ? "all" : label;
    return report;
}

}  // namespace lmchar
