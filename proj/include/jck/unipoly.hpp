#pragma once

// Univariate polynomials over Rational: the target of line restrictions and
// the coordinate functions of parametrized curves.

#include "jck/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace jck {

class UniPoly {
    std::vector<Rational> c_; // c_[i] multiplies t^i; no trailing zeros

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rational& v) { return UniPoly({v}); }

    int degree() const { return int(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const {
        return i >= 0 && i < int(c_.size()) ? c_[i] : Rational(0);
    }
    Rational leading() const {
        if (c_.empty()) throw std::domain_error("UniPoly: zero polynomial has no leading coefficient");
        return c_.back();
    }

    template <typename F>
    F eval(const F& t) const {
        F acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + F(*it);
        return acc;
    }

    UniPoly operator-() const {
        UniPoly p(*this);
        for (auto& x : p.c_) x = -x;
        return p;
    }
    UniPoly operator+(const UniPoly& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return UniPoly(std::move(r));
    }
    UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly();
        std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return UniPoly(std::move(r));
    }
    UniPoly operator*(const Rational& s) const {
        UniPoly p(*this);
        for (auto& x : p.c_) x *= s;
        p.trim();
        return p;
    }
    UniPoly operator/(const Rational& s) const { return *this * s.inverse(); }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    // Remainder of *this by a nonzero divisor.
    UniPoly rem(const UniPoly& d) const {
        if (d.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
        UniPoly r(*this);
        while (!r.is_zero() && r.degree() >= d.degree()) {
            Rational f = r.leading() / d.leading();
            int shift = r.degree() - d.degree();
            std::vector<Rational> sub(shift + d.c_.size(), Rational(0));
            for (std::size_t i = 0; i < d.c_.size(); ++i) sub[i + shift] = d.c_[i] * f;
            r = r - UniPoly(std::move(sub));
        }
        return r;
    }

    // Exact quotient; throws if the division is not exact.
    UniPoly divide_exact(const UniPoly& d) const {
        if (d.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
        UniPoly r(*this), q;
        std::vector<Rational> qc(std::max(0, degree() - d.degree() + 1), Rational(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            Rational f = r.leading() / d.leading();
            int shift = r.degree() - d.degree();
            qc[shift] = f;
            std::vector<Rational> sub(shift + d.c_.size(), Rational(0));
            for (std::size_t i = 0; i < d.c_.size(); ++i) sub[i + shift] = d.c_[i] * f;
            r = r - UniPoly(std::move(sub));
        }
        if (!r.is_zero()) throw std::domain_error("UniPoly: inexact division");
        return UniPoly(std::move(qc));
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this / leading();
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            if (c_[i].is_zero()) continue;
            Rational v = c_[i];
            if (out.empty()) {
                if (v.sign() < 0) { out += "-"; v = -v; }
            } else {
                out += v.sign() < 0 ? " - " : " + ";
                if (v.sign() < 0) v = -v;
            }
            if (i == 0) out += v.str();
            else {
                if (!v.is_one()) out += v.str() + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }
};

inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Divides out the common polynomial factor of a tuple and rescales so that
// coefficients are coprime integers with a positive leading entry.
inline std::vector<UniPoly> primitive_tuple(std::vector<UniPoly> tuple) {
    UniPoly g;
    for (const auto& p : tuple)
        if (!p.is_zero()) g = g.is_zero() ? p.monic() : gcd(g, p);
    if (g.is_zero()) return tuple; // all zero
    if (g.degree() > 0)
        for (auto& p : tuple)
            if (!p.is_zero()) p = p.divide_exact(g);
    Int lcm_den(1), gcd_num(0);
    for (const auto& p : tuple)
        for (const auto& c : p.coeffs()) {
            if (c.is_zero()) continue;
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
            Int n = c.num();
            mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
        }
    if (gcd_num == 0) return tuple;
    Rational scale = Rational(lcm_den, gcd_num).abs();
    int sign = 0;
    for (const auto& p : tuple)
        if (!p.is_zero()) { sign = p.leading().sign(); break; }
    if (sign < 0) scale = -scale;
    for (auto& p : tuple) p = p * scale;
    return tuple;
}

} // namespace jck
