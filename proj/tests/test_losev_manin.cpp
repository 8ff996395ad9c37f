#include <catch_amalgamated.hpp>

#include "lmchar/losev_manin.hpp"

using namespace lmchar;

namespace {

const RationalPoly q = RationalPoly::q();
const Rational half(1, 2);

SymFunc from_coeffs(std::initializer_list<std::pair<Partition, RationalPoly>> terms) {
    SymFunc f;
    for (const auto& [la, c] : terms) f.add_term(la, c);
    return f;
}

}  // namespace

TEST_CASE("signed and plain hook sums at small n") {
    CHECK(signed_hook_sum(1) == SymFunc::power_sum(Partition{1}));
    // f_2 = q s_(2) - s_(1,1) = (q-1)/2 p_(1,1) + (q+1)/2 p_(2)
    CHECK(signed_hook_sum(2) ==
          from_coeffs({{Partition{1, 1}, (q - RationalPoly(1)) * half},
                       {Partition{2}, (q + RationalPoly(1)) * half}}));
    const auto f3 = to_schur(signed_hook_sum(3));
    CHECK(f3.at(Partition{3}) == q * q);
    CHECK(f3.at(Partition{2, 1}) == -q);
    CHECK(f3.at(Partition{1, 1, 1}) == RationalPoly(1));
    CHECK_THROWS_AS(signed_hook_sum(0), std::invalid_argument);

    CHECK(hook_sum(0) == SymFunc::one());
    CHECK(hook_sum(1) == schur(Partition{1}));
    const auto g2 = to_schur(hook_sum(2));
    CHECK(g2.at(Partition{2}) == q);
    CHECK(g2.at(Partition{1, 1}) == RationalPoly(1));
}

TEST_CASE("hook-sum products over partitions") {
    for (unsigned n = 1; n <= 5; ++n) CHECK(signed_hook_product(Partition{n}) == signed_hook_sum(n));
    CHECK(signed_hook_product(Partition{}) == SymFunc::one());
    CHECK(signed_hook_product(Partition{1, 1}) == SymFunc::power_sum(Partition{1, 1}));
    CHECK(signed_hook_product(Partition{2, 1}) ==
          signed_hook_sum(2) * signed_hook_sum(1));
}

TEST_CASE("open stratum class") {
    const auto e1 = bi_to_schur(open_stratum_class(1));
    REQUIRE(e1.size() == 1);
    CHECK(e1.at({Partition{2}, Partition{1}}) == RationalPoly(1));

    BiSymFunc expected2 =
        BiSymFunc::from_parts(Partition{1, 1}, signed_hook_sum(2)) * half;
    expected2 += BiSymFunc::from_parts(Partition{2}, hook_sum(2)) * half;
    CHECK(open_stratum_class(2) == expected2);

    // compactly supported Euler characteristic of the torus is zero
    CHECK(bi_dimension(open_stratum_class(2), 2).evaluate(1) == 0);
    CHECK_THROWS_AS(open_stratum_class(0), std::invalid_argument);
}

TEST_CASE("equivariant polynomial reproduces the reference table") {
    for (unsigned n = 1; n <= 6; ++n)
        CHECK(bi_to_schur(equivariant_poincare(n)) == golden_expansion(n));
    CHECK_THROWS_AS(equivariant_poincare(0), std::invalid_argument);
    CHECK_THROWS_AS(golden_expansion(0), std::out_of_range);
    CHECK_THROWS_AS(golden_expansion(7), std::out_of_range);
}

TEST_CASE("bottom cohomology is the trivial representation") {
    for (unsigned n = 1; n <= 6; ++n) {
        const auto e = bi_to_schur(equivariant_poincare(n));
        for (const auto& [key, c] : e) {
            const bool is_trivial_pair = key.first == Partition{2} && key.second == Partition{n};
            CHECK(c.coeff(0) == (is_trivial_pair ? 1 : 0));
            CHECK(c.degree() <= static_cast<int>(n) - 1);
        }
        CHECK(e.at({Partition{2}, Partition{n}}).coeff(0) == 1);
    }
}

TEST_CASE("series form agrees with the closed formula") {
    const EquivariantSeries series = equivariant_poincare_series(6);
    CHECK(series.at(0) == BiSymFunc(1));
    for (unsigned n = 1; n <= 6; ++n) CHECK(series.at(n) == equivariant_poincare(n));
}

TEST_CASE("forget_s2 extracts the symmetric-group polynomial") {
    CHECK(forget_s2(equivariant_poincare(2), 2) ==
          schur(Partition{2}) * (q + RationalPoly(1)));
    const auto e3 = to_schur(forget_s2(equivariant_poincare(3), 3));
    CHECK(e3.at(Partition{3}) == q * q + RationalPoly(2) * q + RationalPoly(1));
    CHECK(e3.at(Partition{2, 1}) == q);
    CHECK_THROWS_AS(forget_s2(equivariant_poincare(2), 3), std::invalid_argument);
}

// Both x-Schur functions contain ½ p_(1,1)^x, so s_(2)^x f + s_(1^2)^x g
// forgets to f + g.
TEST_CASE("forget_s2 of mixed x-Schur assemblies") {
    const SymFunc f = schur(Partition{2}) * q;
    const SymFunc g = schur(Partition{2}) + schur(Partition{1, 1});
    BiSchurExpansion assembly;
    for (const auto& [la, c] : to_schur(f)) assembly[{Partition{2}, la}] = c;
    for (const auto& [la, c] : to_schur(g)) {
        auto [it, fresh] = assembly.try_emplace({Partition{1, 1}, la}, c);
        if (!fresh) it->second += c;
    }
    CHECK(forget_s2(bi_from_schur(assembly), 2) == f + g);
}

TEST_CASE("recursion matches the closed formula") {
    const auto rec = procesi_recursion(8);
    CHECK(rec[0] == SymFunc::one());
    CHECK(rec[1] == schur(Partition{1}));
    CHECK(rec[2] == schur(Partition{2}) * (RationalPoly(1) + q));
    const auto e3 = to_schur(rec[3]);
    CHECK(e3.at(Partition{3}) == q * q + RationalPoly(2) * q + RationalPoly(1));
    CHECK(e3.at(Partition{2, 1}) == q);
    for (unsigned n = 1; n <= 8; ++n)
        CHECK(forget_s2(equivariant_poincare(n), n) == rec[n]);
    CHECK_THROWS_AS(procesi_recursion(0), std::invalid_argument);
}

TEST_CASE("one-row Hall-Littlewood polynomials") {
    CHECK(hall_littlewood_row(1) == schur(Partition{1}));
    const auto p2 = to_schur(hall_littlewood_row(2));
    CHECK(p2.at(Partition{2}) == RationalPoly(1));
    CHECK(p2.at(Partition{1, 1}) == -q);
    CHECK_THROWS_AS(hall_littlewood_row(0), std::invalid_argument);
    for (unsigned n = 1; n <= 8; ++n) {
        const SymFunc p = hall_littlewood_row(n);
        CHECK(reverse_q(p, n - 1) == signed_hook_sum(n));
        CHECK(reverse_q_signed(p, n - 1) == hook_sum(n));
        CHECK(specialize_q(p, 1) == SymFunc::power_sum(Partition{n}));
    }
}

TEST_CASE("generating series of the symmetric-group polynomials") {
    const auto stem = stembridge_series(8);
    const auto inv = inverse_class_series(8);
    CHECK(stem.coeff(0) == SymFunc::one());
    CHECK(inv.coeff(0) == SymFunc::one());
    CHECK(stem.coeff(1) == schur(Partition{1}));
    CHECK(inv.coeff(1) == schur(Partition{1}));
    CHECK(stem.coeff(2) == schur(Partition{2}) * (q + RationalPoly(1)));
    const auto rec = procesi_recursion(8);
    for (unsigned n = 1; n <= 8; ++n) {
        CHECK(stem.coeff(n) == rec[n]);
        CHECK(inv.coeff(n) == rec[n]);
    }
}

TEST_CASE("Euler-characteristic series") {
    const auto ec = euler_characteristic_series(8);
    CHECK(ec.coeff(1) == SymFunc::power_sum(Partition{1}));
    CHECK(ec.coeff(2) ==
          SymFunc::power_sum(Partition{1, 1}) + SymFunc::power_sum(Partition{2}));
    const auto rec = procesi_recursion(8);
    for (unsigned n = 1; n <= 8; ++n) {
        CHECK(specialize_q(rec[n], 1) == ec.coeff(n));
        CHECK(dimension(ec.coeff(n), n) == RationalPoly(Rational(factorial(n))));
    }
}

TEST_CASE("product identity between H and the one-row polynomials") {
    const auto report = hl_product_identity_check(6);
    CHECK(report.passing());
    CHECK(report.checks.size() == 6);
    CHECK_THROWS_AS(hl_product_identity_check(0), std::invalid_argument);
}

TEST_CASE("a corrupted one-row polynomial breaks the product identity at its degree") {
    const unsigned trunc = 3;
    SymFuncSeries h_series(trunc);
    for (unsigned r = 0; r <= trunc; ++r) h_series.set_coeff(r, complete_h(r));
    const SymFuncSeries lhs = scale_t_by_q(h_series);
    const RationalPoly q_minus_1 = q - RationalPoly(1);
    SymFuncSeries correction(trunc);
    correction.set_coeff(0, SymFunc::one());
    for (unsigned r = 1; r <= trunc; ++r) {
        SymFunc p = hall_littlewood_row(r);
        if (r == 2) p = schur(Partition{2}) + schur(Partition{1, 1}) * q;  // sign flipped
        correction.set_coeff(r, reverse_q(p, r - 1) * q_minus_1);
    }
    const SymFuncSeries rhs = h_series * correction;
    CHECK(lhs.coeff(1) == rhs.coeff(1));
    CHECK(lhs.coeff(2) != rhs.coeff(2));
}

TEST_CASE("graded Betti numbers match the Eulerian oracle") {
    CHECK(poincare_polynomial(2) == RationalPoly(1) + q);
    CHECK(poincare_polynomial(3) == RationalPoly(1) + RationalPoly(4) * q + q * q);
    CHECK(poincare_polynomial(4) ==
          RationalPoly(1) + RationalPoly(11) * q + RationalPoly(11) * (q * q) +
              RationalPoly::monomial(3));
    for (unsigned n = 1; n <= 8; ++n) {
        const RationalPoly pp = poincare_polynomial(n);
        CHECK(pp == eulerian_polynomial(n));
        CHECK(pp.palindromic(n - 1));
        CHECK(pp.nonnegative_integer_coefficients());
        CHECK(pp.evaluate(1) == Rational(factorial(n)));
    }
}

TEST_CASE("both Eulerian computation paths agree") {
    CHECK(eulerian_polynomial(1) == RationalPoly(1));
    CHECK(eulerian_by_descents(3) == RationalPoly(1) + RationalPoly(4) * q + q * q);
    for (unsigned n = 1; n <= 8; ++n) CHECK(eulerian_by_descents(n) == eulerian_by_recurrence(n));
    CHECK_THROWS_AS(eulerian_by_descents(0), std::invalid_argument);
    CHECK_THROWS_AS(eulerian_by_descents(11), std::invalid_argument);
    CHECK_THROWS_AS(eulerian_by_recurrence(0), std::invalid_argument);
}

TEST_CASE("verify runs the selected suites in canonical order") {
    const auto report = verify(6, {"appendix-table"});
    CHECK(report.passing());
    CHECK(report.suite == "appendix-table");
    CHECK(report.checks.size() == 6);
    for (unsigned i = 0; i < 6; ++i) {
        CHECK(report.checks[i].name == "appendix-table");
        CHECK(report.checks[i].n == i + 1);
        CHECK(report.checks[i].detail.empty());
    }

    const auto multi = verify(3, {"inverse-series", "procesi"});
    CHECK(multi.suite == "procesi,inverse-series");  // canonical order, not call order
    CHECK(multi.passing());

    const auto all = verify(4, {"all"});
    CHECK(all.suite == "all");
    CHECK(all.passing());
    // every suite contributes at least one record per n
    CHECK(all.checks.size() == 9 * 4 + 4);  // hall-littlewood adds product records

    CHECK_THROWS_AS(verify(0, {"all"}), std::invalid_argument);
    CHECK_THROWS_AS(verify(3, {"bogus"}), std::invalid_argument);
}

TEST_CASE("reports aggregate pass/fail") {
    VerificationReport r;
    r.checks.push_back(Check{"x", 1, true, ""});
    CHECK(r.passing());
    r.checks.push_back(Check{"x", 2, false, "boom"});
    CHECK_FALSE(r.passing());
}
