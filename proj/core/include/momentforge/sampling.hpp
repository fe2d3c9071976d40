#pragma once

#include <map>
#include <optional>
#include <vector>

#include "momentforge/combinat.hpp"
#include "momentforge/poly.hpp"
#include "momentforge/sparse_poly.hpp"

namespace momentforge::sampling {

/// Polynomial in power-sum symbols S_1, S_2, .. (and joint-moment symbols)
/// with coefficients in the field of rational functions of the sample size n.
using StatPoly = SparsePoly<RationalFunctionInN>;

/// k_i, the unique symmetric unbiased estimator of the i-th cumulant,
/// expressed in power sums. Fast path: no set partitions are enumerated.
StatPoly k_statistic(int i, std::optional<int> cap = {});

/// Polykay k_{r,..,t}: symmetric statistic with expectation c_r ... c_t.
StatPoly polykay(const std::vector<int>& indices, std::optional<int> cap = {});

/// Augmented monomial symmetric function in power sums, for the multiset of
/// exponents theta (order irrelevant).
StatPoly augmented_to_powersums(const std::vector<int>& theta);

/// One dot factor (n . monomial): a monomial in the base umbrae given by its
/// exponent vector, optionally carrying correlated-singleton tags.
struct DotFactor {
    std::vector<int> exponents;
    std::vector<int> tags;

    friend bool operator<(const DotFactor& a, const DotFactor& b) {
        return std::tie(a.exponents, a.tags) < std::tie(b.exponents, b.tags);
    }
    friend bool operator==(const DotFactor& a, const DotFactor& b) {
        return a.exponents == b.exponents && a.tags == b.tags;
    }
};

/// Joint moments m_{t1..tk}: an entry maps a multi-index either to a value
/// or, when the optional is empty, to the symbol m[t1,..,tk]. A missing
/// entry is an error at use time.
struct JointMomentTable {
    int dim = 1;
    std::map<std::vector<int>, std::optional<Rational>> entries;

    /// Declare every index of total order <= max_total as symbolic.
    static JointMomentTable symbolic(int dim, int max_total);
};

/// E[prod (n . monomial_i)^{power_i}] over multiset subdivisions, with the
/// correlated-singleton pruning rule applied per block.
StatPoly expectation_of_product(const std::vector<std::pair<DotFactor, int>>& factors,
                                const JointMomentTable& joints,
                                std::optional<int> cap = {});

/// Term of the expansion of (m . alpha)^i over products of U-statistics:
/// coefficient d * (m)_nu / (n)_nu attached to the partition lambda.
struct AugmentedTerm {
    combinat::IntPartition lambda;
    Int d;
    int nu;
};
std::vector<AugmentedTerm> power_to_augmented(int i);

enum class MobiusDirection { Products, Polykays };

/// Products direction: a_pi = sum over tau <= pi of c_tau; Polykays
/// direction: c_pi = sum mu(tau, pi) a_tau. Keys are partition types.
std::map<std::vector<int>, Rational> moments_polykays_mobius(MobiusDirection direction,
                                                             const combinat::SetPartition& pi,
                                                             std::optional<int> cap = {});

/// Closed-form Mobius function of the full partition lattice.
Rational partition_mobius(const combinat::SetPartition& tau, const combinat::SetPartition& pi);

/// Evaluate a statistic on concrete data: S_r -> sum x_j^r, n -> sample size.
Rational evaluate_at_sample(const StatPoly& stat, const std::vector<Rational>& data);

} // namespace momentforge::sampling
