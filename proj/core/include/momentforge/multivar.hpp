#pragma once

#include <map>
#include <optional>
#include <vector>

#include "momentforge/poly.hpp"
#include "momentforge/sparse_poly.hpp"
#include "momentforge/umbral.hpp"

namespace momentforge::multivar {

using MultiIndex = std::vector<int>;

int total_order(const MultiIndex& i);

/// Multivariate moments m_i up to a total order; the zero index holds 1.
/// Entries missing below the declared order are reported as errors, never
/// silently treated as zero.
class MultiMomentTable {
public:
    MultiMomentTable(int dim, int max_total);

    int dim() const { return dim_; }
    int max_total() const { return max_total_; }

    void set(const MultiIndex& idx, const Rational& value);
    const Rational& at(const MultiIndex& idx) const;
    bool has(const MultiIndex& idx) const { return entries_.count(idx) > 0; }
    const std::map<MultiIndex, Rational>& entries() const { return entries_; }

    /// Fill every index of total order <= max_total with the given generator.
    template <class F>
    static MultiMomentTable generate(int dim, int max_total, F f) {
        MultiMomentTable t(dim, max_total);
        std::vector<int> idx(static_cast<size_t>(dim), 0);
        t.fill_rec(idx, 0, max_total, f);
        return t;
    }

    /// Moments of the coordinate sum mu_1 + .. + mu_k, orders 0..max_total.
    std::vector<Rational> sum_moments() const;

    /// Quadratic Gaussian table: entries sigma_{rs} at order-2 indices, zero
    /// at every other positive order.
    static MultiMomentTable gaussian_quadratic(const std::vector<std::vector<Rational>>& sigma,
                                               int max_total);

    /// Fully correlated Bernoulli tuple: entry at j is B_{|j|}.
    static MultiMomentTable bernoulli_tuple(int dim, int max_total);

private:
    template <class F>
    void fill_rec(std::vector<int>& idx, int pos, int rest, F& f) {
        if (pos == dim_) {
            set(idx, f(idx));
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            idx[static_cast<size_t>(pos)] = v;
            fill_rec(idx, pos + 1, rest - v, f);
        }
        idx[static_cast<size_t>(pos)] = 0;
    }

    int dim_;
    int max_total_;
    std::map<MultiIndex, Rational> entries_;
};

/// Symmetric positive-definite covariance data with exact rational entries;
/// the square root factor C with C C' = Sigma is caller-supplied when needed.
struct CovarianceSpec {
    std::vector<std::vector<Rational>> sigma;
    std::optional<std::vector<std::vector<Rational>>> factor;

    int dim() const { return static_cast<int>(sigma.size()); }
    void validate() const;
    /// Exact inverse; throws input_error when singular.
    std::vector<std::vector<Rational>> inverse() const;
};

/// E[(m . mu)^i] over multi-index partitions; symbolic variant in m.
Rational multivariate_dot(const MultiMomentTable& mu, const Rational& m, const MultiIndex& i);
PolyN multivariate_dot_poly(const MultiMomentTable& mu, const MultiIndex& i);

/// Composition cases. a) univariate outer with one multivariate inner;
/// b) multivariate outer with a univariate inner; c)/d) multivariate outer
/// with one shared inner; e) one inner per outer coordinate.
Rational compose_univariate_outer(const umbral::MomentSeq& outer, const MultiMomentTable& inner,
                                  const MultiIndex& i);
Rational compose_univariate_inner(const MultiMomentTable& outer, const umbral::MomentSeq& inner,
                                  int i);
Rational compose_shared_inner(const MultiMomentTable& outer, const MultiMomentTable& inner,
                              const MultiIndex& i);
Rational compose_per_coordinate(const MultiMomentTable& outer,
                                const std::vector<MultiMomentTable>& inners,
                                const MultiIndex& i);

/// Whole-table variants of case a).
MultiMomentTable compose_univariate_outer_table(const umbral::MomentSeq& outer,
                                                const MultiMomentTable& inner, int max_total);

MultiMomentTable multivariate_cumulants(const MultiMomentTable& mu, int order);
MultiMomentTable multivariate_moments_from_cumulants(const MultiMomentTable& cum, int order);

enum class HermiteVariant { H, HTilde };

/// Multivariate Hermite polynomial in x_1..x_k.
SparsePoly<Rational> multivariate_hermite(const MultiIndex& i, const CovarianceSpec& sigma,
                                          HermiteVariant variant);

/// Multivariate Bernoulli polynomial of order v; polynomial in x_1..x_k and t.
SparsePoly<Rational> multivariate_bernoulli(const MultiIndex& v);

/// Moments of t.beta.mu as polynomials in t, per multi-index (case-a weights).
PolyN randomized_compound_poisson_poly(const MultiMomentTable& mu, const MultiIndex& i);

} // namespace momentforge::multivar
