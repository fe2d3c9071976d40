#pragma once

#include <optional>
#include <vector>

#include "momentforge/combinat.hpp"
#include "momentforge/multivar.hpp"
#include "momentforge/sampling.hpp"
#include "momentforge/umbral.hpp"

namespace momentforge::oracle {

/// Mobius weights mu(pi, 1_n) for every partition pi of the lattice, paired
/// with pi's type. The full lattice uses the closed form; interval and
/// non-crossing lattices use generic poset recursion on the enumerated poset.
std::vector<std::pair<std::vector<int>, Rational>> lattice_mobius_weights(
    combinat::LatticeKind kind, int n, std::optional<int> cap = {});

/// n-th cumulant of the given kind as the Mobius sum over the lattice.
Rational cumulants_via_lattice(const umbral::MomentSeq& a, combinat::LatticeKind kind, int n,
                               std::optional<int> cap = {});

/// mu(pi, 1_n) by generic top-down recursion over the full partition lattice;
/// reference for the closed form.
Rational full_lattice_mobius_recursive(const combinat::SetPartition& pi, int n);

/// k-statistic assembled through the subdivision route with literal set
/// partitions; deliberately naive, capped at i <= 8.
sampling::StatPoly naive_kstatistic(int i);

/// Truncated substitution of exponential multivariate series: outer composed
/// with f(inner_j) - 1 per coordinate. Inners must agree in dimension.
multivar::MultiMomentTable multivariate_series_compose(
    const std::vector<Rational>& outer_univariate, const multivar::MultiMomentTable& inner,
    int total_order);
multivar::MultiMomentTable multivariate_series_compose(
    const multivar::MultiMomentTable& outer, const std::vector<multivar::MultiMomentTable>& inners,
    int total_order);

} // namespace momentforge::oracle
