#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "apath/rational.hpp"

namespace apath {

// Element p + q*sqrt(d) of the real quadratic field Q(sqrt(d)), d a
// square-free positive integer fixed per computation. All arithmetic is
// exact; sign and comparisons are decided without floating point.
class QuadNumber {
public:
    QuadNumber() = default;
    QuadNumber(Rational p, Rational q, long long d) : p_(p), q_(q), d_(d) {
        if (d <= 0) throw std::domain_error("QuadNumber: d must be positive");
    }
    static QuadNumber rational(Rational p, long long d) { return QuadNumber(p, Rational(0), d); }
    static QuadNumber sqrt_d(long long d) { return QuadNumber(Rational(0), Rational(1), d); }

    const Rational& p() const { return p_; }
    const Rational& q() const { return q_; }
    long long d() const { return d_; }

    bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

    QuadNumber operator-() const { return QuadNumber(-p_, -q_, d_); }

    friend QuadNumber operator+(const QuadNumber& a, const QuadNumber& b) {
        a.check(b);
        return QuadNumber(a.p_ + b.p_, a.q_ + b.q_, a.d_);
    }
    friend QuadNumber operator-(const QuadNumber& a, const QuadNumber& b) {
        a.check(b);
        return QuadNumber(a.p_ - b.p_, a.q_ - b.q_, a.d_);
    }
    friend QuadNumber operator*(const QuadNumber& a, const QuadNumber& b) {
        a.check(b);
        return QuadNumber(a.p_ * b.p_ + a.q_ * b.q_ * Rational(a.d_),
                          a.p_ * b.q_ + a.q_ * b.p_, a.d_);
    }

    QuadNumber conj() const { return QuadNumber(p_, -q_, d_); }

    // Field norm p^2 - d q^2; zero iff the element is zero (d square-free).
    Rational field_norm() const { return p_ * p_ - Rational(d_) * q_ * q_; }

    QuadNumber inverse() const {
        Rational n = field_norm();
        if (n.is_zero()) throw std::domain_error("QuadNumber: inverse of zero");
        return QuadNumber(p_ / n, -q_ / n, d_);
    }
    friend QuadNumber operator/(const QuadNumber& a, const QuadNumber& b) {
        return a * b.inverse();
    }

    friend bool operator==(const QuadNumber& a, const QuadNumber& b) {
        return a.d_ == b.d_ && a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const QuadNumber& a, const QuadNumber& b) { return !(a == b); }

    // Exact sign of p + q*sqrt(d): compare p and -q*sqrt(d) by squaring,
    // taking care of the sign quadrant first.
    int sign() const {
        if (q_.is_zero()) return p_.sign();
        if (p_.is_zero()) return q_.sign();
        int sp = p_.sign(), sq = q_.sign();
        if (sp > 0 && sq > 0) return 1;
        if (sp < 0 && sq < 0) return -1;
        // Opposite signs: |p| vs |q|sqrt(d)  <=>  p^2 vs d q^2.
        Rational lhs = p_ * p_;
        Rational rhs = Rational(d_) * q_ * q_;
        if (lhs == rhs) return 0;  // impossible for square-free d, q != 0
        bool p_dominates = lhs > rhs;
        return p_dominates ? sp : sq;
    }

    QuadNumber abs() const { return sign() < 0 ? -*this : *this; }

    friend bool operator<(const QuadNumber& a, const QuadNumber& b) {
        return (a - b).sign() < 0;
    }

    double to_double() const {
        return p_.to_double() + q_.to_double() * std::sqrt(static_cast<double>(d_));
    }

    // Renders "p/q" when the irrational part vanishes, otherwise
    // "p/q+r/s*sqrt(d)" (with "-" folded into r).
    std::string str() const {
        if (q_.is_zero()) return p_.str();
        std::string s = p_.is_zero() ? "" : p_.str();
        if (!s.empty() && q_.sign() > 0) s += "+";
        s += q_.str() + "*sqrt(" + std::to_string(d_) + ")";
        return s;
    }

    // Parses "p", "p/q", "r/s*sqrt(d)", or "p/q+r/s*sqrt(d)" (also with '-').
    static QuadNumber parse(const std::string& s, long long d);

private:
    void check(const QuadNumber& o) const {
        if (d_ != o.d_) throw std::invalid_argument("QuadNumber: mixed radicands");
    }

    Rational p_{0};
    Rational q_{0};
    long long d_ = 2;
};

}  // namespace apath
