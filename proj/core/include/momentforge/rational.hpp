#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "momentforge/errors.hpp"

namespace momentforge {

using Int = mpz_class;

/// Exact rational scalar: always reduced, denominator > 0, canonical zero 0/1.
///
/// Backed by GMP. Serializes as "p/q", or just "p" when the denominator is 1;
/// that string form is the one used in every JSON payload.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}
    Rational(const Int& num, const Int& den) {
        if (den == 0) throw input_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    static Rational parse(const std::string& s) {
        if (s.empty()) throw input_error("empty rational literal");
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(Int(s));
            Int num(s.substr(0, slash));
            Int den(s.substr(slash + 1));
            return Rational(num, den);
        } catch (const std::invalid_argument&) {
            throw input_error("bad rational literal: " + s);
        }
    }

    Int num() const { return Int(v_.get_num()); }
    Int den() const { return Int(v_.get_den()); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string str() const {
        return v_.get_den() == 1 ? v_.get_num().get_str() : v_.get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw input_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        mpq_class base = e < 0 ? mpq_class(1 / v_) : v_;
        if (e < 0 && is_zero()) throw input_error("zero to a negative power");
        unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
        mpq_class out;
        mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), k);
        mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), k);
        out.canonicalize();
        return Rational(std::move(out));
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

inline Int int_factorial(long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return f;
}

inline Int int_binomial(long n, long k) {
    if (k < 0 || k > n) return Int(0);
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

/// (x)_k = x (x-1) ... (x-k+1), with (x)_0 = 1.
inline Rational falling_factorial(const Rational& x, int k) {
    Rational p(1);
    for (int j = 0; j < k; ++j) p *= x - Rational(j);
    return p;
}

inline Int int_falling_factorial(long n, int k) {
    Int p(1);
    for (int j = 0; j < k; ++j) p *= Int(n - j);
    return p;
}

} // namespace momentforge
