#include "momentforge/multivar.hpp"

#include <algorithm>
#include <functional>

#include "momentforge/combinat.hpp"
#include "momentforge/errors.hpp"

namespace momentforge::multivar {

using combinat::MultiIndexPartition;
using combinat::multi_index_partitions;

int total_order(const MultiIndex& i) {
    int t = 0;
    for (int v : i) {
        if (v < 0) throw input_error("multi-index components must be non-negative");
        t += v;
    }
    return t;
}

MultiMomentTable::MultiMomentTable(int dim, int max_total) : dim_(dim), max_total_(max_total) {
    if (dim < 1) throw input_error("MultiMomentTable: dimension must be >= 1");
    entries_[MultiIndex(static_cast<size_t>(dim), 0)] = Rational(1);
}

void MultiMomentTable::set(const MultiIndex& idx, const Rational& value) {
    if (static_cast<int>(idx.size()) != dim_) throw input_error("MultiMomentTable: index dimension mismatch");
    if (total_order(idx) == 0 && !value.is_one())
        throw input_error("MultiMomentTable: entry at the zero index must be 1");
    entries_[idx] = value;
}

const Rational& MultiMomentTable::at(const MultiIndex& idx) const {
    auto it = entries_.find(idx);
    if (it == entries_.end()) throw input_error("MultiMomentTable: missing entry");
    return it->second;
}

std::vector<Rational> MultiMomentTable::sum_moments() const {
    std::vector<Rational> s(static_cast<size_t>(max_total_) + 1, Rational(0));
    s[0] = Rational(1);
    for (int j = 1; j <= max_total_; ++j) {
        // E[(mu_1 + .. + mu_k)^j] = sum over |t| = j of j!/t! m_t
        Rational acc(0);
        std::vector<int> idx(static_cast<size_t>(dim_), 0);
        std::function<void(int, int)> rec = [&](int pos, int rest) {
            if (pos == dim_ - 1) {
                idx[static_cast<size_t>(pos)] = rest;
                Int denom(1);
                for (int v : idx) denom *= int_factorial(v);
                acc += Rational(int_factorial(j)) / Rational(denom) * at(idx);
                return;
            }
            for (int v = 0; v <= rest; ++v) {
                idx[static_cast<size_t>(pos)] = v;
                rec(pos + 1, rest - v);
            }
            idx[static_cast<size_t>(pos)] = 0;
        };
        rec(0, j);
        s[static_cast<size_t>(j)] = acc;
    }
    return s;
}

MultiMomentTable MultiMomentTable::gaussian_quadratic(
    const std::vector<std::vector<Rational>>& sigma, int max_total) {
    const int k = static_cast<int>(sigma.size());
    return generate(k, max_total, [&](const MultiIndex& idx) {
        if (total_order(idx) != 2) return Rational(0);
        int first = -1, second = -1;
        for (int d = 0; d < k; ++d) {
            if (idx[static_cast<size_t>(d)] == 2) { first = second = d; }
            else if (idx[static_cast<size_t>(d)] == 1) { (first < 0 ? first : second) = d; }
        }
        return sigma[static_cast<size_t>(first)][static_cast<size_t>(second)];
    });
}

MultiMomentTable MultiMomentTable::bernoulli_tuple(int dim, int max_total) {
    return generate(dim, max_total, [&](const MultiIndex& idx) {
        return combinat::bernoulli_number(total_order(idx));
    });
}

void CovarianceSpec::validate() const {
    const int k = dim();
    for (const auto& row : sigma)
        if (static_cast<int>(row.size()) != k) throw input_error("covariance matrix not square");
    for (int r = 0; r < k; ++r)
        for (int s = 0; s < k; ++s)
            if (sigma[static_cast<size_t>(r)][static_cast<size_t>(s)] !=
                sigma[static_cast<size_t>(s)][static_cast<size_t>(r)])
                throw input_error("covariance matrix not symmetric");
    if (factor) {
        const auto& C = *factor;
        if (static_cast<int>(C.size()) != k) throw input_error("factor dimension mismatch");
        for (int r = 0; r < k; ++r)
            for (int s = 0; s < k; ++s) {
                Rational acc(0);
                for (int l = 0; l < k; ++l)
                    acc += C[static_cast<size_t>(r)][static_cast<size_t>(l)] *
                           C[static_cast<size_t>(s)][static_cast<size_t>(l)];
                if (acc != sigma[static_cast<size_t>(r)][static_cast<size_t>(s)])
                    throw input_error("factor does not satisfy C C' = Sigma");
            }
    }
}

std::vector<std::vector<Rational>> CovarianceSpec::inverse() const {
    const int k = dim();
    auto a = sigma;
    std::vector<std::vector<Rational>> inv(static_cast<size_t>(k),
                                           std::vector<Rational>(static_cast<size_t>(k), Rational(0)));
    for (int r = 0; r < k; ++r) inv[static_cast<size_t>(r)][static_cast<size_t>(r)] = Rational(1);
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int r = col; r < k; ++r)
            if (!a[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) { pivot = r; break; }
        if (pivot < 0) throw input_error("covariance matrix is singular");
        std::swap(a[static_cast<size_t>(pivot)], a[static_cast<size_t>(col)]);
        std::swap(inv[static_cast<size_t>(pivot)], inv[static_cast<size_t>(col)]);
        const Rational p = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
        for (int c = 0; c < k; ++c) {
            a[static_cast<size_t>(col)][static_cast<size_t>(c)] /= p;
            inv[static_cast<size_t>(col)][static_cast<size_t>(c)] /= p;
        }
        for (int r = 0; r < k; ++r) {
            if (r == col) continue;
            const Rational f = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f.is_zero()) continue;
            for (int c = 0; c < k; ++c) {
                a[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    f * a[static_cast<size_t>(col)][static_cast<size_t>(c)];
                inv[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    f * inv[static_cast<size_t>(col)][static_cast<size_t>(c)];
            }
        }
    }
    return inv;
}

// i! / (m(lambda)! lambda!) together with the product of table moments over
// the columns of lambda
static Rational partition_weight(const MultiMomentTable& mu, const MultiIndex& i,
                                 const MultiIndexPartition& lambda, Rational& moment_product) {
    Int num(1);
    for (int v : i) num *= int_factorial(v);
    const Int den = lambda.multiplicity_factorial() * lambda.entry_factorial();
    moment_product = Rational(1);
    for (const auto& [col, r] : lambda.columns)
        moment_product *= mu.at(col).pow(r);
    return Rational(num, den);
}

Rational multivariate_dot(const MultiMomentTable& mu, const Rational& m, const MultiIndex& i) {
    if (total_order(i) == 0) return Rational(1);
    if (total_order(i) > mu.max_total()) throw input_error("multivariate_dot: order exceeds table");
    Rational acc(0);
    for (const auto& lambda : multi_index_partitions(i)) {
        Rational mp;
        const Rational w = partition_weight(mu, i, lambda, mp);
        acc += w * falling_factorial(m, lambda.length()) * mp;
    }
    return acc;
}

PolyN multivariate_dot_poly(const MultiMomentTable& mu, const MultiIndex& i) {
    if (total_order(i) == 0) return PolyN::one();
    if (total_order(i) > mu.max_total()) throw input_error("multivariate_dot: order exceeds table");
    PolyN acc;
    for (const auto& lambda : multi_index_partitions(i)) {
        Rational mp;
        const Rational w = partition_weight(mu, i, lambda, mp);
        acc += PolyN::falling_factorial(lambda.length()).scaled(w * mp);
    }
    return acc;
}

PolyN randomized_compound_poisson_poly(const MultiMomentTable& mu, const MultiIndex& i) {
    // E[(t.beta.mu)^i]: weight t^{l(lambda)} instead of (t)_{l(lambda)}
    if (total_order(i) == 0) return PolyN::one();
    PolyN acc;
    for (const auto& lambda : multi_index_partitions(i)) {
        Rational mp;
        const Rational w = partition_weight(mu, i, lambda, mp);
        acc += PolyN::monomial(lambda.length(), w * mp);
    }
    return acc;
}

Rational compose_univariate_outer(const umbral::MomentSeq& outer, const MultiMomentTable& inner,
                                  const MultiIndex& i) {
    if (total_order(i) == 0) return Rational(1);
    if (total_order(i) > outer.order())
        throw input_error("compose_univariate_outer: outer order too small");
    Rational acc(0);
    for (const auto& lambda : multi_index_partitions(i)) {
        Rational mp;
        const Rational w = partition_weight(inner, i, lambda, mp);
        acc += w * outer[lambda.length()] * mp;
    }
    return acc;
}

Rational compose_univariate_inner(const MultiMomentTable& outer, const umbral::MomentSeq& inner,
                                  int i) {
    const std::vector<Rational> sum = outer.sum_moments();
    if (i > static_cast<int>(sum.size()) - 1 || i > inner.order())
        throw input_error("compose_univariate_inner: order exceeded");
    umbral::MomentSeq sigma{std::vector<Rational>(sum.begin(), sum.begin() + i + 1)};
    umbral::MomentSeq in{std::vector<Rational>(inner.moments().begin(),
                                               inner.moments().begin() + i + 1)};
    return umbral::composition_umbra(sigma, in, i)[i];
}

Rational compose_shared_inner(const MultiMomentTable& outer, const MultiMomentTable& inner,
                              const MultiIndex& i) {
    if (total_order(i) == 0) return Rational(1);
    const std::vector<Rational> sum = outer.sum_moments();
    if (total_order(i) > static_cast<int>(sum.size()) - 1)
        throw input_error("compose_shared_inner: outer order too small");
    Rational acc(0);
    for (const auto& lambda : multi_index_partitions(i)) {
        Rational mp;
        const Rational w = partition_weight(inner, i, lambda, mp);
        acc += w * sum[static_cast<size_t>(lambda.length())] * mp;
    }
    return acc;
}

Rational compose_per_coordinate(const MultiMomentTable& outer,
                                const std::vector<MultiMomentTable>& inners,
                                const MultiIndex& i) {
    const int k = outer.dim();
    if (static_cast<int>(inners.size()) != k)
        throw input_error("compose_per_coordinate: need one inner per outer coordinate");
    const int m = inners.empty() ? 0 : inners[0].dim();
    for (const auto& t : inners)
        if (t.dim() != m) throw input_error("compose_per_coordinate: inner arity mismatch");
    if (static_cast<int>(i.size()) != m)
        throw input_error("compose_per_coordinate: index dimension mismatch");
    if (total_order(i) == 0) return Rational(1);

    // sum over splittings i = i_1 + .. + i_k of the multinomial coefficient
    // times sum over per-coordinate partitions, with the outer joint moment
    // taken at (l(lambda_1), .., l(lambda_k))
    Rational acc(0);
    std::vector<MultiIndex> split(static_cast<size_t>(k), MultiIndex(i.size(), 0));

    // per coordinate j and sub-index, the list of (weight, length) pairs
    auto piece_terms = [&](int j, const MultiIndex& sub) {
        std::vector<std::pair<Rational, int>> terms;
        if (total_order(sub) == 0) {
            terms.emplace_back(Rational(1), 0);
            return terms;
        }
        for (const auto& lambda : multi_index_partitions(sub)) {
            Rational mp;
            Int num(1);
            for (int v : sub) num *= int_factorial(v);
            const Int den = lambda.multiplicity_factorial() * lambda.entry_factorial();
            mp = Rational(1);
            for (const auto& [col, r] : lambda.columns)
                mp *= inners[static_cast<size_t>(j)].at(col).pow(r);
            terms.emplace_back(Rational(num, den) * mp, lambda.length());
        }
        return terms;
    };

    Int i_factorial(1);
    for (int v : i) i_factorial *= int_factorial(v);

    std::function<void(int, const MultiIndex&, const Rational&, MultiIndex&)> rec =
        [&](int j, const MultiIndex& rest, const Rational& weight, MultiIndex& lengths) {
            if (j == k - 1) {
                for (const auto& [w, len] : piece_terms(j, rest)) {
                    lengths[static_cast<size_t>(j)] = len;
                    acc += weight * w * outer.at(lengths);
                }
                lengths[static_cast<size_t>(j)] = 0;
                return;
            }
            // enumerate sub-indices <= rest componentwise
            MultiIndex sub(rest.size(), 0);
            std::function<void(size_t)> gen = [&](size_t pos) {
                if (pos == rest.size()) {
                    MultiIndex next(rest.size());
                    for (size_t d = 0; d < rest.size(); ++d)
                        next[d] = rest[d] - sub[d];
                    for (const auto& [w, len] : piece_terms(j, sub)) {
                        lengths[static_cast<size_t>(j)] = len;
                        rec(j + 1, next, weight * w, lengths);
                    }
                    lengths[static_cast<size_t>(j)] = 0;
                    return;
                }
                for (int v = 0; v <= rest[pos]; ++v) {
                    sub[pos] = v;
                    gen(pos + 1);
                }
                sub[pos] = 0;
            };
            gen(0);
        };

    MultiIndex lengths(static_cast<size_t>(k), 0);
    rec(0, i, Rational(1), lengths);
    return acc;
}

MultiMomentTable compose_univariate_outer_table(const umbral::MomentSeq& outer,
                                                const MultiMomentTable& inner, int max_total) {
    return MultiMomentTable::generate(inner.dim(), max_total, [&](const MultiIndex& idx) {
        return compose_univariate_outer(outer, inner, idx);
    });
}

MultiMomentTable multivariate_cumulants(const MultiMomentTable& mu, int order) {
    // outer umbra chi.chi with moments (-1)^{i-1}(i-1)!
    std::vector<Rational> logm(static_cast<size_t>(order) + 1);
    logm[0] = Rational(1);
    for (int i = 1; i <= order; ++i) {
        Rational v(int_factorial(i - 1));
        logm[static_cast<size_t>(i)] = (i % 2 == 0) ? -v : v;
    }
    return compose_univariate_outer_table(umbral::MomentSeq(std::move(logm)), mu, order);
}

MultiMomentTable multivariate_moments_from_cumulants(const MultiMomentTable& cum, int order) {
    return compose_univariate_outer_table(umbral::named(umbral::NamedUmbra::Unity, order), cum,
                                          order);
}

// multinomial expansion of prod_j x_j^{i_j} binomials: iterate sub-indices
static void for_each_subindex(const MultiIndex& i,
                              const std::function<void(const MultiIndex&, const Int&)>& body) {
    MultiIndex sub(i.size(), 0);
    std::function<void(size_t, Int)> rec = [&](size_t pos, Int coeff) {
        if (pos == i.size()) {
            body(sub, coeff);
            return;
        }
        for (int v = 0; v <= i[pos]; ++v) {
            sub[pos] = v;
            rec(pos + 1, coeff * int_binomial(i[pos], v));
        }
        sub[pos] = 0;
    };
    rec(0, Int(1));
}

SparsePoly<Rational> multivariate_hermite(const MultiIndex& i, const CovarianceSpec& sigma,
                                          HermiteVariant variant) {
    sigma.validate();
    const int k = sigma.dim();
    if (static_cast<int>(i.size()) != k) throw input_error("multivariate_hermite: index dimension mismatch");
    const int order = total_order(i);

    const auto inv = sigma.inverse();
    const auto& table_matrix = variant == HermiteVariant::HTilde ? sigma.sigma : inv;
    const MultiMomentTable table = MultiMomentTable::gaussian_quadratic(table_matrix, order);

    // E[(-1.beta.mu + y)^i] with y = x (HTilde) or y = x Sigma^{-1} (H)
    SparsePoly<Rational> out;
    for_each_subindex(i, [&](const MultiIndex& j, const Int& binom) {
        // contribution: binom * y^j * E[(-1.beta.mu)^{i-j}]
        MultiIndex rest(i.size());
        for (size_t d = 0; d < i.size(); ++d) rest[d] = i[static_cast<size_t>(d)] - j[d];
        const Rational tail = randomized_compound_poisson_poly(table, rest).eval(Rational(-1));
        if (tail.is_zero()) return;
        SparsePoly<Rational> ypow(Rational(binom) * tail);
        for (int d = 0; d < k; ++d)
            for (int e = 0; e < j[static_cast<size_t>(d)]; ++e) {
                if (variant == HermiteVariant::HTilde) {
                    ypow *= SparsePoly<Rational>::from_symbol(Symbol::x(d + 1), Rational(1));
                } else {
                    // (x Sigma^{-1})_d = sum_s x_s (Sigma^{-1})_{s d}
                    SparsePoly<Rational> lin;
                    for (int s = 0; s < k; ++s)
                        lin += SparsePoly<Rational>::from_symbol(
                            Symbol::x(s + 1), inv[static_cast<size_t>(s)][static_cast<size_t>(d)]);
                    ypow *= lin;
                }
            }
        out += ypow;
    });
    return out;
}

SparsePoly<Rational> multivariate_bernoulli(const MultiIndex& v) {
    const int k = static_cast<int>(v.size());
    const int order = total_order(v);
    const MultiMomentTable iota = MultiMomentTable::bernoulli_tuple(k, order);

    SparsePoly<Rational> out;
    for_each_subindex(v, [&](const MultiIndex& j, const Int& binom) {
        MultiIndex rest(v.size());
        for (size_t d = 0; d < v.size(); ++d) rest[d] = v[d] - j[d];
        const PolyN tail = multivariate_dot_poly(iota, rest); // E[(t.iota)^rest] in t
        if (tail.is_zero()) return;
        SparsePoly<Rational> term;
        for (int deg = 0; deg <= tail.degree(); ++deg) {
            const Rational c = tail.coeff(deg);
            if (c.is_zero()) continue;
            Monomial mono = deg > 0 ? monomial_of(Symbol::t(), deg) : Monomial{};
            term.add_term(mono, c);
        }
        term = term.scaled(Rational(binom));
        for (int d = 0; d < k; ++d)
            if (j[static_cast<size_t>(d)] > 0)
                term *= SparsePoly<Rational>::from_symbol(Symbol::x(d + 1), Rational(1))
                            .pow(j[static_cast<size_t>(d)]);
        out += term;
    });
    return out;
}

} // namespace momentforge::multivar
