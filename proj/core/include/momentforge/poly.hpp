#pragma once

#include <string>
#include <vector>

#include "momentforge/rational.hpp"

namespace momentforge {

/// Dense univariate polynomial over Rational. The indeterminate is abstract;
/// printing defaults to "n" because sample-size coefficients are the main use.
class PolyN {
public:
    PolyN() = default;
    explicit PolyN(Rational c) {
        if (!c.is_zero()) coeffs_.push_back(std::move(c));
    }

    static PolyN zero() { return PolyN(); }
    static PolyN one() { return PolyN(Rational(1)); }
    static PolyN variable() { return monomial(1, Rational(1)); }
    static PolyN monomial(int deg, const Rational& c);
    static PolyN from_coeffs(std::vector<Rational> c);
    /// n (n-1) ... (n-k+1)
    static PolyN falling_factorial(int k);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

    Rational eval(const Rational& x) const;

    PolyN operator-() const;
    PolyN& operator+=(const PolyN& o);
    PolyN& operator-=(const PolyN& o);
    friend PolyN operator+(PolyN a, const PolyN& b) { return a += b; }
    friend PolyN operator-(PolyN a, const PolyN& b) { return a -= b; }
    friend PolyN operator*(const PolyN& a, const PolyN& b);
    PolyN& operator*=(const PolyN& o) { return *this = *this * o; }
    PolyN scaled(const Rational& c) const;

    friend bool operator==(const PolyN& a, const PolyN& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const PolyN& a, const PolyN& b) { return !(a == b); }

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<PolyN, PolyN> divmod(const PolyN& a, const PolyN& b);
    /// Monic gcd; gcd(0, 0) = 0.
    static PolyN gcd(PolyN a, PolyN b);
    PolyN monic() const;

    std::string str(const std::string& sym = "n") const;

private:
    void trim();
    std::vector<Rational> coeffs_; // coeffs_[i] multiplies sym^i; empty means zero
};

/// Element of Q(n): reduced quotient of polynomials with monic denominator.
class RationalFunctionInN {
public:
    RationalFunctionInN() : num_(), den_(PolyN::one()) {}
    RationalFunctionInN(const Rational& c) : num_(PolyN(c)), den_(PolyN::one()) {}
    RationalFunctionInN(PolyN num, PolyN den);

    static RationalFunctionInN from_poly(PolyN p) {
        return RationalFunctionInN(std::move(p), PolyN::one());
    }
    /// 1 / (n)_k
    static RationalFunctionInN inverse_falling_factorial(int k) {
        return RationalFunctionInN(PolyN::one(), PolyN::falling_factorial(k));
    }

    const PolyN& num() const { return num_; }
    const PolyN& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunctionInN operator-() const;
    RationalFunctionInN& operator+=(const RationalFunctionInN& o);
    RationalFunctionInN& operator-=(const RationalFunctionInN& o);
    RationalFunctionInN& operator*=(const RationalFunctionInN& o);
    RationalFunctionInN& operator/=(const RationalFunctionInN& o);
    friend RationalFunctionInN operator+(RationalFunctionInN a, const RationalFunctionInN& b) { return a += b; }
    friend RationalFunctionInN operator-(RationalFunctionInN a, const RationalFunctionInN& b) { return a -= b; }
    friend RationalFunctionInN operator*(RationalFunctionInN a, const RationalFunctionInN& b) { return a *= b; }
    friend RationalFunctionInN operator/(RationalFunctionInN a, const RationalFunctionInN& b) { return a /= b; }

    friend bool operator==(const RationalFunctionInN& a, const RationalFunctionInN& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunctionInN& a, const RationalFunctionInN& b) { return !(a == b); }
    friend bool operator<(const RationalFunctionInN& a, const RationalFunctionInN& b);

    /// Exact evaluation; throws input_error if the denominator vanishes at x.
    Rational eval(const Rational& x) const;

    std::string str(const std::string& sym = "n") const;

private:
    void normalize();
    PolyN num_, den_;
};

} // namespace momentforge
