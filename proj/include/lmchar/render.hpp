#pragma once

#include <string>

#include "bisymfunc.hpp"
#include "symfunc.hpp"

namespace lmchar {

inline std::string rational_text(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// "2 q^3 + 3 q^2 + 2 q", descending exponents; "0" for the zero polynomial.
inline std::string poly_text(const RationalPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const unsigned e = it->first;
        const Rational& c = it->second;
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (e == 0) {
            out += rational_text(a);
        } else {
            if (a != 1) out += rational_text(a) + " ";
            out += (e == 1) ? "q" : "q^" + std::to_string(e);
        }
    }
    return out;
}

// Compact form used in LaTeX output: "2 q^4+6 q^3+6 q^2+2 q".
inline std::string poly_latex(const RationalPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const unsigned e = it->first;
        const Rational& c = it->second;
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? "-" : "+";
        }
        if (e == 0) {
            out += rational_text(a);
        } else {
            if (a != 1) out += rational_text(a) + " ";
            if (e == 1)
                out += "q";
            else if (e < 10)
                out += "q^" + std::to_string(e);
            else
                out += "q^{" + std::to_string(e) + "}";
        }
    }
    return out;
}

// "[3,1,1]"; the empty partition renders as "[]".
inline std::string partition_text(const Partition& la) {
    std::string out = "[";
    for (std::size_t i = 0; i < la.parts().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(la.parts()[i]);
    }
    return out + "]";
}

// "(3,1^2)" with multiplicity exponents, as in s_{(3,1^2)}.
inline std::string partition_latex(const Partition& la) {
    std::string out = "(";
    const auto& p = la.parts();
    std::size_t i = 0;
    bool first = true;
    while (i < p.size()) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        if (!first) out += ",";
        first = false;
        out += std::to_string(p[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out + ")";
}

namespace detail {

// Monomial with coefficient 1 (a bare power of q)?
inline bool is_unit_monomial(const RationalPoly& p) {
    return p.terms().size() == 1 && p.terms().begin()->second == 1;
}

inline std::string latex_coeff_prefix(const RationalPoly& p) {
    if (p == RationalPoly(1)) return "";
    if (is_unit_monomial(p)) return poly_latex(p) + " \\, ";
    return "(" + poly_latex(p) + ") ";
}

}  // namespace detail

// One line per term: "s[2]^x s[2]^y * (q + 1)".
inline std::string table_text(const BiSchurExpansion& e) {
    std::string out;
    for (const auto& [key, c] : e) {
        if (!out.empty()) out += "\n";
        out += "s" + partition_text(key.first) + "^x s" + partition_text(key.second) + "^y * (" +
               poly_text(c) + ")";
    }
    return out;
}

// One line per term: "s[3]^y * (q^2 + 2 q + 1)".
inline std::string table_text(const SchurExpansion& e) {
    std::string out;
    for (const auto& [la, c] : e) {
        if (!out.empty()) out += "\n";
        out += "s" + partition_text(la) + "^y * (" + poly_text(c) + ")";
    }
    return out;
}

// x-Schur factor times parenthesized y-Schur sums; single-term groups are
// rendered inline with the coefficient out front.
inline std::string table_latex(const BiSchurExpansion& e) {
    std::string out;
    auto it = e.begin();
    while (it != e.end()) {
        auto group_end = it;
        while (group_end != e.end() && group_end->first.first == it->first.first) ++group_end;
        const std::string sx = "s_{" + partition_latex(it->first.first) + "}^x";
        if (!out.empty()) out += " + ";
        if (std::next(it) == group_end) {
            out += detail::latex_coeff_prefix(it->second) + sx + " s_{" +
                   partition_latex(it->first.second) + "}^y";
        } else {
            out += sx + " \\Bigl(";
            bool first = true;
            for (; it != group_end; ++it) {
                if (!first) out += " + ";
                first = false;
                out += detail::latex_coeff_prefix(it->second) + "s_{" +
                       partition_latex(it->first.second) + "}^y";
            }
            out += "\\Bigr)";
        }
        it = group_end;
    }
    return out;
}

inline std::string table_latex(const SchurExpansion& e) {
    std::string out;
    for (const auto& [la, c] : e) {
        if (!out.empty()) out += " + ";
        out += detail::latex_coeff_prefix(c) + "s_{" + partition_latex(la) + "}^y";
    }
    return out;
}

// Power-sum rendering with constant or polynomial coefficients, partitions
// ascending: "p[1,1] + p[2]", "2 p[2,1]", "(q + 1) p[2]".
inline std::string powersum_text(const SymFunc& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [la, c] = *it;
        std::string piece;
        bool neg = false;
        if (c.degree() <= 0) {
            const Rational v = c.coeff(0);
            neg = v < 0;
            const Rational a = neg ? Rational(-v) : v;
            if (a != 1) piece += rational_text(a) + " ";
        } else {
            piece += "(" + poly_text(c) + ") ";
        }
        piece += "p" + partition_text(la);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += piece;
    }
    return out;
}

}  // namespace lmchar
