#pragma once

// Sparse multivariate polynomials over Rational. Terms are kept in graded
// lexicographic order (degree first, then lex with x1 > x2 > ...), zero
// coefficients are never stored, so equality is representational.

#include "jck/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace jck {

struct Monomial {
    std::vector<std::uint8_t> e;

    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }

    // graded lex: higher degree first, then lexicographically larger exponent
    // vector first.
    bool graded_before(const Monomial& o) const {
        int da = degree(), db = o.degree();
        if (da != db) return da > db;
        return e > o.e;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.e.resize(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            int s = int(e[i]) + int(o.e[i]);
            if (s > 255) throw std::overflow_error("Monomial: exponent overflow");
            r.e[i] = static_cast<std::uint8_t>(s);
        }
        return r;
    }

    struct Hash {
        std::size_t operator()(const Monomial& m) const {
            std::size_t h = 1469598103934665603ULL;
            for (auto b : m.e) {
                h ^= b;
                h *= 1099511628211ULL;
            }
            return h;
        }
    };
};

class MultiPoly {
public:
    struct Term {
        Monomial mono;
        Rational coef;
    };

private:
    int nvars_ = 0;
    std::vector<Term> terms_; // graded-lex descending, no zero coefficients

    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return a.mono.graded_before(b.mono); });
    }

public:
    MultiPoly() = default;
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rational& c) {
        MultiPoly p(nvars);
        if (!c.is_zero()) p.terms_.push_back({Monomial{std::vector<std::uint8_t>(nvars, 0)}, c});
        return p;
    }

    static MultiPoly variable(int nvars, int i) {
        if (i < 0 || i >= nvars) throw std::out_of_range("MultiPoly::variable");
        MultiPoly p(nvars);
        Monomial m{std::vector<std::uint8_t>(nvars, 0)};
        m.e[i] = 1;
        p.terms_.push_back({m, Rational(1)});
        return p;
    }

    static MultiPoly from_terms(int nvars, std::vector<Term> terms) {
        std::unordered_map<Monomial, Rational, Monomial::Hash> acc;
        for (auto& t : terms) {
            if (int(t.mono.e.size()) != nvars)
                throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
            acc[t.mono] += t.coef;
        }
        MultiPoly p(nvars);
        for (auto& [m, c] : acc)
            if (!c.is_zero()) p.terms_.push_back({m, c});
        p.sort_terms();
        return p;
    }

    int num_vars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d; // -1 for the zero polynomial
    }

    bool is_homogeneous(int d) const {
        for (const auto& t : terms_)
            if (t.mono.degree() != d) return false;
        return true;
    }

    bool is_homogeneous() const {
        return terms_.empty() || is_homogeneous(terms_.front().mono.degree());
    }

    bool operator==(const MultiPoly& o) const {
        if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coef != o.terms_[i].coef)
                return false;
        return true;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

private:
    void check_vars(const MultiPoly& o) const {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("MultiPoly: variable-count mismatch");
    }

    static MultiPoly from_map(int nvars,
                              std::unordered_map<Monomial, Rational, Monomial::Hash>&& acc) {
        MultiPoly p(nvars);
        p.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
        p.sort_terms();
        return p;
    }

public:
    MultiPoly operator-() const {
        MultiPoly p(*this);
        for (auto& t : p.terms_) t.coef = -t.coef;
        return p;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        check_vars(o);
        // merge two sorted term lists
        MultiPoly p(nvars_);
        p.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size() ||
                (i < terms_.size() && terms_[i].mono.graded_before(o.terms_[j].mono))) {
                p.terms_.push_back(terms_[i++]);
            } else if (i == terms_.size() || o.terms_[j].mono.graded_before(terms_[i].mono)) {
                p.terms_.push_back(o.terms_[j++]);
            } else {
                Rational c = terms_[i].coef + o.terms_[j].coef;
                if (!c.is_zero()) p.terms_.push_back({terms_[i].mono, c});
                ++i, ++j;
            }
        }
        return p;
    }

    MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }

    MultiPoly operator*(const MultiPoly& o) const {
        check_vars(o);
        std::unordered_map<Monomial, Rational, Monomial::Hash> acc;
        acc.reserve(terms_.size() + o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) acc[a.mono * b.mono] += a.coef * b.coef;
        return from_map(nvars_, std::move(acc));
    }

    MultiPoly operator*(const Rational& c) const {
        if (c.is_zero()) return MultiPoly(nvars_);
        MultiPoly p(*this);
        for (auto& t : p.terms_) t.coef *= c;
        return p;
    }

    MultiPoly operator/(const Rational& c) const { return *this * c.inverse(); }

    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly pow(unsigned k) const {
        MultiPoly r = constant(nvars_, Rational(1));
        MultiPoly b(*this);
        for (; k; k >>= 1) {
            if (k & 1) r = r * b;
            if (k > 1) b = b * b;
        }
        return r;
    }

    // Evaluation over any field constructible from Rational.
    template <typename F>
    F eval(const std::vector<F>& x) const {
        if (int(x.size()) != nvars_)
            throw std::invalid_argument("MultiPoly::eval: arity mismatch");
        F acc(0);
        for (const auto& t : terms_) {
            F m(t.coef);
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < t.mono.e[i]; ++k) m = m * x[i];
            acc = acc + m;
        }
        return acc;
    }

    // Exact symbolic substitution x_i -> subs[i].
    MultiPoly compose(const std::vector<MultiPoly>& subs) const {
        if (int(subs.size()) != nvars_)
            throw std::invalid_argument("MultiPoly::compose: arity mismatch");
        int target = subs.empty() ? 0 : subs.front().num_vars();
        for (const auto& s : subs)
            if (s.num_vars() != target)
                throw std::invalid_argument("MultiPoly::compose: substituents disagree on arity");
        // memoize powers of each substituent
        std::vector<std::vector<MultiPoly>> pows(nvars_);
        for (int i = 0; i < nvars_; ++i) pows[i].push_back(constant(target, Rational(1)));
        MultiPoly acc(target);
        for (const auto& t : terms_) {
            MultiPoly m = constant(target, t.coef);
            for (int i = 0; i < nvars_; ++i) {
                int e = t.mono.e[i];
                if (e == 0) continue;
                while (int(pows[i].size()) <= e) pows[i].push_back(pows[i].back() * subs[i]);
                m = m * pows[i][e];
            }
            acc += m;
        }
        return acc;
    }

    // Exact division by the variable x_i; throws if any term lacks it.
    MultiPoly divide_by_variable(int i) const {
        MultiPoly p(*this);
        for (auto& t : p.terms_) {
            if (t.mono.e[i] == 0)
                throw std::domain_error("MultiPoly: not divisible by variable");
            t.mono.e[i] -= 1;
        }
        return p;
    }

    // Coefficient of a given monomial (zero if absent).
    Rational coefficient(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.mono == m) return t.coef;
        return Rational(0);
    }

    // Rendered in graded-lex order with explicit '*' and '^'; variables are
    // named x1..xk by default.
    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        auto var_name = [&](int i) {
            return i < int(names.size()) ? names[i] : "x" + std::to_string(i + 1);
        };
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            Rational c = t.coef;
            if (first) {
                if (c.sign() < 0) { out += "-"; c = -c; }
            } else {
                out += c.sign() < 0 ? " - " : " + ";
                if (c.sign() < 0) c = -c;
            }
            std::string mono;
            for (int i = 0; i < nvars_; ++i) {
                if (t.mono.e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += var_name(i);
                if (t.mono.e[i] > 1) mono += "^" + std::to_string(int(t.mono.e[i]));
            }
            if (mono.empty()) out += c.str();
            else if (c.is_one()) out += mono;
            else out += c.str() + "*" + mono;
            first = false;
        }
        return out;
    }
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

// A rational map given by an ordered tuple of forms, all homogeneous of the
// same degree in the same variables.
struct RationalMapT {
    int source_vars = 0;
    std::vector<MultiPoly> components;

    RationalMapT() = default;
    RationalMapT(int vars, std::vector<MultiPoly> comps)
        : source_vars(vars), components(std::move(comps)) {
        validate();
    }

    void validate() const {
        if (components.empty())
            throw std::invalid_argument("RationalMapT: no components");
        int deg = -1;
        bool all_zero = true;
        for (const auto& c : components) {
            if (c.num_vars() != source_vars)
                throw std::invalid_argument("RationalMapT: variable-count mismatch");
            if (c.is_zero()) continue;
            all_zero = false;
            if (!c.is_homogeneous())
                throw std::invalid_argument("RationalMapT: non-homogeneous component");
            if (deg == -1) deg = c.degree();
            else if (deg != c.degree())
                throw std::invalid_argument("RationalMapT: components of unequal degree");
        }
        if (all_zero) throw std::invalid_argument("RationalMapT: all components zero");
    }

    int degree() const {
        for (const auto& c : components)
            if (!c.is_zero()) return c.degree();
        return -1;
    }

    template <typename F>
    std::vector<F> eval(const std::vector<F>& x) const {
        std::vector<F> out;
        out.reserve(components.size());
        for (const auto& c : components) out.push_back(c.template eval<F>(x));
        return out;
    }

    // Componentwise substitution by another map's components.
    std::vector<MultiPoly> compose(const std::vector<MultiPoly>& subs) const {
        std::vector<MultiPoly> out;
        out.reserve(components.size());
        for (const auto& c : components) out.push_back(c.compose(subs));
        return out;
    }
};

} // namespace jck
