#include "momentforge/poly.hpp"

#include <sstream>

namespace momentforge {

void PolyN::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PolyN PolyN::monomial(int deg, const Rational& c) {
    PolyN p;
    if (c.is_zero() || deg < 0) return p;
    p.coeffs_.assign(static_cast<size_t>(deg) + 1, Rational(0));
    p.coeffs_[static_cast<size_t>(deg)] = c;
    return p;
}

PolyN PolyN::from_coeffs(std::vector<Rational> c) {
    PolyN p;
    p.coeffs_ = std::move(c);
    p.trim();
    return p;
}

PolyN PolyN::falling_factorial(int k) {
    PolyN p = one();
    for (int j = 0; j < k; ++j)
        p *= from_coeffs({Rational(-j), Rational(1)});
    return p;
}

Rational PolyN::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

PolyN PolyN::operator-() const {
    PolyN p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

PolyN& PolyN::operator+=(const PolyN& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

PolyN& PolyN::operator-=(const PolyN& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

PolyN operator*(const PolyN& a, const PolyN& b) {
    if (a.is_zero() || b.is_zero()) return PolyN();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return PolyN::from_coeffs(std::move(out));
}

PolyN PolyN::scaled(const Rational& c) const {
    if (c.is_zero()) return PolyN();
    PolyN p = *this;
    for (auto& x : p.coeffs_) x *= c;
    return p;
}

std::pair<PolyN, PolyN> PolyN::divmod(const PolyN& a, const PolyN& b) {
    if (b.is_zero()) throw input_error("polynomial division by zero");
    PolyN rem = a;
    PolyN quot;
    const int db = b.degree();
    const Rational lead = b.leading();
    while (!rem.is_zero() && rem.degree() >= db) {
        const int d = rem.degree() - db;
        const Rational c = rem.leading() / lead;
        quot += monomial(d, c);
        rem -= b * monomial(d, c);
    }
    return {quot, rem};
}

PolyN PolyN::gcd(PolyN a, PolyN b) {
    while (!b.is_zero()) {
        PolyN r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

PolyN PolyN::monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / leading());
}

std::string PolyN::str(const std::string& sym) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Rational c = coeff(d);
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        const Rational mag = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? "-" : "+");
        }
        if (d == 0) {
            os << mag.str();
        } else {
            if (!mag.is_one()) os << mag.str() << "*";
            os << sym;
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

RationalFunctionInN::RationalFunctionInN(PolyN num, PolyN den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw input_error("rational function with zero denominator");
    normalize();
}

void RationalFunctionInN::normalize() {
    if (num_.is_zero()) {
        den_ = PolyN::one();
        return;
    }
    PolyN g = PolyN::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = PolyN::divmod(num_, g).first;
        den_ = PolyN::divmod(den_, g).first;
    }
    const Rational lead = den_.leading();
    if (!lead.is_one()) {
        const Rational inv = Rational(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunctionInN RationalFunctionInN::operator-() const {
    RationalFunctionInN r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunctionInN& RationalFunctionInN::operator+=(const RationalFunctionInN& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunctionInN& RationalFunctionInN::operator-=(const RationalFunctionInN& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunctionInN& RationalFunctionInN::operator*=(const RationalFunctionInN& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunctionInN& RationalFunctionInN::operator/=(const RationalFunctionInN& o) {
    if (o.is_zero()) throw input_error("rational function division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

bool operator<(const RationalFunctionInN& a, const RationalFunctionInN& b) {
    auto key = [](const PolyN& p) {
        std::vector<std::pair<Int, Int>> k;
        for (const auto& c : p.coeffs()) k.emplace_back(c.num(), c.den());
        return k;
    };
    auto ka = std::make_pair(key(a.num()), key(a.den()));
    auto kb = std::make_pair(key(b.num()), key(b.den()));
    return ka < kb;
}

Rational RationalFunctionInN::eval(const Rational& x) const {
    const Rational d = den_.eval(x);
    if (d.is_zero()) throw input_error("rational function pole at evaluation point");
    return num_.eval(x) / d;
}

static bool multi_term(const std::string& s) {
    return s.find_first_of("+-", 1) != std::string::npos || s.find('*') != std::string::npos;
}

std::string RationalFunctionInN::str(const std::string& sym) const {
    if (den_.is_one()) return num_.str(sym);
    const std::string ns = num_.str(sym);
    const std::string ds = den_.str(sym);
    std::string out;
    out += multi_term(ns) ? "(" + ns + ")" : ns;
    out += "/";
    out += multi_term(ds) ? "(" + ds + ")" : ds;
    return out;
}

} // namespace momentforge
