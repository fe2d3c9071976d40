#pragma once

#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "momentforge/rational.hpp"

namespace momentforge {

/// Printable indeterminate with a fixed display order: x-variables first,
/// then t, n, power sums S_j, variations X_j, joint moments m[..],
/// population moments a_j, cumulants c_j, then anything else by name.
struct Symbol {
    enum class Kind : int {
        X = 0,
        T = 1,
        N = 2,
        PowerSum = 3,
        Variation = 4,
        Joint = 5,
        Moment = 6,
        Cumulant = 7,
        Other = 8,
    };

    Kind kind = Kind::Other;
    int index = 0;
    std::vector<int> multi;
    std::string other_name;

    static Symbol x() { return {Kind::X, 0, {}, {}}; }
    static Symbol x(int j) { return {Kind::X, j, {}, {}}; }
    static Symbol t() { return {Kind::T, 0, {}, {}}; }
    static Symbol n() { return {Kind::N, 0, {}, {}}; }
    static Symbol S(int j) { return {Kind::PowerSum, j, {}, {}}; }
    static Symbol X_var(int j) { return {Kind::Variation, j, {}, {}}; }
    static Symbol m(std::vector<int> idx) { return {Kind::Joint, 0, std::move(idx), {}}; }
    static Symbol a(int j) { return {Kind::Moment, j, {}, {}}; }
    static Symbol c(int j) { return {Kind::Cumulant, j, {}, {}}; }
    static Symbol other(std::string name) { return {Kind::Other, 0, {}, std::move(name)}; }

    std::string name() const {
        switch (kind) {
            case Kind::X: return index == 0 ? "x" : "x" + std::to_string(index);
            case Kind::T: return "t";
            case Kind::N: return "n";
            case Kind::PowerSum: return "S" + std::to_string(index);
            case Kind::Variation: return "X" + std::to_string(index);
            case Kind::Joint: {
                std::string s = "m[";
                for (size_t i = 0; i < multi.size(); ++i) {
                    if (i) s += ",";
                    s += std::to_string(multi[i]);
                }
                return s + "]";
            }
            case Kind::Moment: return "a" + std::to_string(index);
            case Kind::Cumulant: return "c" + std::to_string(index);
            case Kind::Other: return other_name;
        }
        return other_name;
    }

    friend bool operator<(const Symbol& a, const Symbol& b) {
        return std::tie(a.kind, a.index, a.multi, a.other_name) <
               std::tie(b.kind, b.index, b.multi, b.other_name);
    }
    friend bool operator==(const Symbol& a, const Symbol& b) {
        return a.kind == b.kind && a.index == b.index && a.multi == b.multi &&
               a.other_name == b.other_name;
    }
};

/// Exponent map with positive exponents only; the empty monomial is 1.
using Monomial = std::map<Symbol, int>;

inline Monomial monomial_of(const Symbol& s, int e = 1) {
    Monomial m;
    if (e != 0) m[s] = e;
    return m;
}

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (const auto& [sym, e] : b) {
        auto it = out.find(sym);
        if (it == out.end()) out.emplace(sym, e);
        else if ((it->second += e) == 0) out.erase(it);
    }
    return out;
}

/// Canonical string form: symbols in display order, '^' powers, '*' separators.
inline std::string monomial_str(const Monomial& m) {
    if (m.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [sym, e] : m) {
        if (!first) os << "*";
        first = false;
        os << sym.name();
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

/// Sparse polynomial over a commutative coefficient ring C.
/// C must provide +, -, *, default construction (zero) and is_zero().
template <class C>
class SparsePoly {
public:
    using Terms = std::map<Monomial, C>;

    SparsePoly() = default;
    explicit SparsePoly(const C& constant) { add_term({}, constant); }

    static SparsePoly from_symbol(const Symbol& s, const C& coeff) {
        SparsePoly p;
        p.add_term(monomial_of(s), coeff);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(const Monomial& m, const C& coeff) {
        if (coeff.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, coeff);
        } else {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    C coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C() : it->second;
    }

    SparsePoly operator-() const {
        SparsePoly out;
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }
    SparsePoly& operator+=(const SparsePoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.add_term(monomial_mul(ma, mb), ca * cb);
        return out;
    }
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

    SparsePoly scaled(const C& c) const {
        SparsePoly out;
        if (c.is_zero()) return out;
        for (const auto& [m, v] : terms_) out.add_term(m, v * c);
        return out;
    }

    SparsePoly pow(int e) const {
        SparsePoly out(C(Rational(1)));
        for (int i = 0; i < e; ++i) out *= *this;
        return out;
    }

    /// Replace every occurrence of `sym` by the polynomial `value`.
    SparsePoly substitute(const Symbol& sym, const SparsePoly& value) const {
        SparsePoly out;
        for (const auto& [m, c] : terms_) {
            auto it = m.find(sym);
            if (it == m.end()) {
                out.add_term(m, c);
                continue;
            }
            Monomial rest = m;
            const int e = it->second;
            rest.erase(sym);
            SparsePoly piece;
            piece.add_term(rest, c);
            piece *= value.pow(e);
            out += piece;
        }
        return out;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    std::string str(const std::string& coeff_sym = "n") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << coeff_str(c, coeff_sym) << ")";
            if (!m.empty()) os << "*" << monomial_str(m);
        }
        return os.str();
    }

private:
    static std::string coeff_str(const Rational& c, const std::string&) { return c.str(); }
    template <class T>
    static std::string coeff_str(const T& c, const std::string& sym) { return c.str(sym); }

    Terms terms_;
};

} // namespace momentforge
