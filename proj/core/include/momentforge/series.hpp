#pragma once

#include <vector>

#include "momentforge/rational.hpp"

namespace momentforge {

/// Truncated exponential series 1 + sum a_i z^i / i!, stored by its
/// coefficient sequence a_0..a_N (the i-th derivative at 0, not a_i/i!).
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int i) const { return coeffs_[static_cast<size_t>(i)]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Ordinary coefficients a_i / i!.
    std::vector<Rational> ordinary() const;
    static TruncatedSeries from_ordinary(const std::vector<Rational>& c);

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<Rational> coeffs_;
};

/// Coefficients of f_outer(f_inner - 1) up to the common order.
/// Requires equal orders and inner constant coefficient 1.
TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// g with f * g = 1 up to order N; requires constant coefficient 1.
TruncatedSeries series_reciprocal(const TruncatedSeries& f);

/// Product of generating functions (binomial convolution of the sequences).
TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g);

/// f raised to a rational power t: f^t, requires constant coefficient 1.
TruncatedSeries series_pow(const TruncatedSeries& f, const Rational& t);

} // namespace momentforge
