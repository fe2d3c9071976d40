#pragma once

#include <optional>
#include <vector>

#include "momentforge/multivar.hpp"
#include "momentforge/rational.hpp"
#include "momentforge/umbral.hpp"

namespace momentforge::sheppard {

/// Grouping geometry: one window width per coordinate; group counts are
/// present only for discrete parent distributions.
struct SheppardConfig {
    std::vector<Rational> widths;
    std::vector<std::optional<int>> group_counts;

    void validate() const;
};

/// Continuous correction: a_i = sum_j C(i,j) (2^{1-j} - 1) B_j h^j grouped_{i-j}.
umbral::MomentSeq sheppard_correct(const umbral::MomentSeq& grouped, const Rational& h, int order);

/// Discrete correction: shift by h (iota + 1/2) + (h/m) (-1.iota - 1/2).
umbral::MomentSeq sheppard_discrete(const umbral::MomentSeq& grouped, const Rational& h, int m,
                                    int order);

/// Multivariate correction: product of per-coordinate correction polynomials
/// with monomials replaced by grouped table entries.
multivar::MultiMomentTable sheppard_multivariate(const multivar::MultiMomentTable& grouped,
                                                 const SheppardConfig& config,
                                                 const multivar::MultiIndex& order);

/// Moments of the combined per-coordinate shift umbra, orders 0..order.
/// Continuous case when m is absent.
std::vector<Rational> shift_moments(const Rational& h, std::optional<int> m, int order);

} // namespace momentforge::sheppard
