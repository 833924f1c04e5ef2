#pragma once

// Arithmetic in a quadratic extension Q(sqrt(D)): elements a + b*sqrt(D).
// D is fixed per value and must agree between operands unless one side is
// rational (b = 0). D need not be positive; D = 0 marks a plain rational.

#include "jck/rational.hpp"

#include <stdexcept>
#include <string>

namespace jck {

class QuadScalar {
    Rational a_, b_;
    long long d_ = 0;

    void normalize() {
        if (b_.is_zero()) d_ = 0;
    }

    static long long join(long long x, long long y) {
        if (x == 0) return y;
        if (y == 0) return x;
        if (x != y)
            throw std::domain_error("QuadScalar: mixed radicands " + std::to_string(x) +
                                    " and " + std::to_string(y));
        return x;
    }

public:
    QuadScalar() = default;
    QuadScalar(int n) : a_(n) {}
    QuadScalar(long n) : a_(n) {}
    QuadScalar(const Rational& a) : a_(a) {}
    QuadScalar(Rational a, Rational b, long long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (d == 1) { a_ += b_; b_ = Rational(0); }
        normalize();
    }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    long long radicand() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadScalar conj() const { return QuadScalar(a_, -b_, d_); }

    // a^2 - D b^2, always rational.
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    QuadScalar operator-() const { return QuadScalar(-a_, -b_, d_); }
    QuadScalar operator+(const QuadScalar& o) const {
        return QuadScalar(a_ + o.a_, b_ + o.b_, join(d_, o.d_));
    }
    QuadScalar operator-(const QuadScalar& o) const {
        return QuadScalar(a_ - o.a_, b_ - o.b_, join(d_, o.d_));
    }
    QuadScalar operator*(const QuadScalar& o) const {
        long long d = join(d_, o.d_);
        return QuadScalar(a_ * o.a_ + Rational(d) * b_ * o.b_, a_ * o.b_ + b_ * o.a_, d);
    }
    QuadScalar operator/(const QuadScalar& o) const {
        if (o.is_zero()) throw std::domain_error("QuadScalar: division by zero");
        Rational n = o.norm();
        QuadScalar c = o.conj();
        QuadScalar t = *this * c;
        return QuadScalar(t.a_ / n, t.b_ / n, t.d_);
    }
    QuadScalar& operator+=(const QuadScalar& o) { return *this = *this + o; }
    QuadScalar& operator-=(const QuadScalar& o) { return *this = *this - o; }
    QuadScalar& operator*=(const QuadScalar& o) { return *this = *this * o; }
    QuadScalar& operator/=(const QuadScalar& o) { return *this = *this / o; }

    bool operator==(const QuadScalar& o) const {
        return a_ == o.a_ && b_ == o.b_ && (b_.is_zero() || d_ == o.d_);
    }
    bool operator!=(const QuadScalar& o) const { return !(*this == o); }

    QuadScalar inverse() const { return QuadScalar(Rational(1)) / *this; }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string s = a_.is_zero() ? "" : a_.str();
        if (!s.empty() && b_.sign() > 0) s += "+";
        s += b_.str() + "*sqrt(" + std::to_string(d_) + ")";
        return s;
    }
};

} // namespace jck
