#include "momentforge/series.hpp"

#include "momentforge/errors.hpp"

namespace momentforge {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw input_error("truncated series needs at least the constant term");
}

std::vector<Rational> TruncatedSeries::ordinary() const {
    std::vector<Rational> c(coeffs_.size());
    Int fact(1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i > 0) fact *= Int(static_cast<long>(i));
        c[i] = coeffs_[i] / Rational(fact);
    }
    return c;
}

TruncatedSeries TruncatedSeries::from_ordinary(const std::vector<Rational>& c) {
    std::vector<Rational> a(c.size());
    Int fact(1);
    for (size_t i = 0; i < c.size(); ++i) {
        if (i > 0) fact *= Int(static_cast<long>(i));
        a[i] = c[i] * Rational(fact);
    }
    return TruncatedSeries(std::move(a));
}

static std::vector<Rational> mul_trunc(const std::vector<Rational>& a,
                                       const std::vector<Rational>& b, size_t n) {
    std::vector<Rational> out(n, Rational(0));
    for (size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size() && i + j < n; ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (outer.order() != inner.order())
        throw input_error("series_compose: order mismatch");
    if (!inner[0].is_one())
        throw input_error("series_compose: inner constant coefficient must be 1");
    const size_t n = static_cast<size_t>(outer.order()) + 1;

    std::vector<Rational> u = inner.ordinary(); // f_inner - 1 after zeroing index 0
    u[0] = Rational(0);
    const std::vector<Rational> g = outer.ordinary();

    // result = sum_k g_k u^k; u has zero constant term so u^k starts at degree k
    std::vector<Rational> result(n, Rational(0));
    std::vector<Rational> upow(n, Rational(0));
    upow[0] = Rational(1);
    result[0] += g[0];
    for (size_t k = 1; k < n; ++k) {
        upow = mul_trunc(upow, u, n);
        bool all_zero = true;
        for (size_t i = 0; i < n; ++i) {
            if (!g[k].is_zero() && !upow[i].is_zero()) {
                result[i] += g[k] * upow[i];
            }
            if (!upow[i].is_zero()) all_zero = false;
        }
        if (all_zero) break;
    }
    return TruncatedSeries::from_ordinary(result);
}

TruncatedSeries series_reciprocal(const TruncatedSeries& f) {
    if (!f[0].is_one())
        throw input_error("series_reciprocal: constant coefficient must be 1");
    const size_t n = static_cast<size_t>(f.order()) + 1;
    const std::vector<Rational> c = f.ordinary();
    std::vector<Rational> g(n, Rational(0));
    g[0] = Rational(1);
    for (size_t i = 1; i < n; ++i) {
        Rational s(0);
        for (size_t j = 1; j <= i; ++j) s += c[j] * g[i - j];
        g[i] = -s;
    }
    return TruncatedSeries::from_ordinary(g);
}

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.order() != g.order()) throw input_error("series_mul: order mismatch");
    const size_t n = static_cast<size_t>(f.order()) + 1;
    return TruncatedSeries::from_ordinary(mul_trunc(f.ordinary(), g.ordinary(), n));
}

TruncatedSeries series_pow(const TruncatedSeries& f, const Rational& t) {
    if (!f[0].is_one()) throw input_error("series_pow: constant coefficient must be 1");
    const size_t n = static_cast<size_t>(f.order()) + 1;
    const std::vector<Rational> c = f.ordinary();
    // f^t = exp(t log f): solve (f^t)' f = t f' f^t coefficientwise.
    std::vector<Rational> g(n, Rational(0));
    g[0] = Rational(1);
    for (size_t i = 1; i < n; ++i) {
        // i g_i = sum_{j=1..i} (t j - (i - j)) c_j g_{i-j}
        Rational s(0);
        for (size_t j = 1; j <= i; ++j)
            s += (t * Rational(static_cast<long>(j)) - Rational(static_cast<long>(i - j))) * c[j] * g[i - j];
        g[i] = s / Rational(static_cast<long>(i));
    }
    return TruncatedSeries::from_ordinary(g);
}

} // namespace momentforge
