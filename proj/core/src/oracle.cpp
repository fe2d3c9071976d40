#include "momentforge/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "momentforge/errors.hpp"

namespace momentforge::oracle {

using combinat::LatticeKind;
using combinat::SetPartition;

std::vector<std::pair<std::vector<int>, Rational>> lattice_mobius_weights(LatticeKind kind, int n,
                                                                          std::optional<int> cap) {
    std::vector<SetPartition> elems = combinat::lattice_partitions(kind, n, cap);
    std::vector<std::pair<std::vector<int>, Rational>> out;
    out.reserve(elems.size());

    if (kind == LatticeKind::All) {
        for (const auto& pi : elems) {
            const int b = pi.block_count();
            Rational mu(int_factorial(b - 1));
            if (b % 2 == 0) mu = -mu;
            out.emplace_back(pi.type(), mu);
        }
        return out;
    }

    // generic poset recursion, coarsest first so mu of everything above a
    // partition is already known
    std::vector<size_t> order(elems.size());
    for (size_t i = 0; i < elems.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return elems[a].block_count() < elems[b].block_count();
    });
    std::vector<Rational> mu(elems.size());
    for (size_t oi = 0; oi < order.size(); ++oi) {
        const size_t i = order[oi];
        if (elems[i].block_count() == 1) {
            mu[i] = Rational(1);
            continue;
        }
        Rational s(0);
        for (size_t oj = 0; oj < oi; ++oj) {
            const size_t j = order[oj];
            if (combinat::refines(elems[i], elems[j])) s += mu[j];
        }
        mu[i] = -s;
    }
    for (size_t i = 0; i < elems.size(); ++i) out.emplace_back(elems[i].type(), mu[i]);
    return out;
}

Rational cumulants_via_lattice(const umbral::MomentSeq& a, LatticeKind kind, int n,
                               std::optional<int> cap) {
    if (n > a.order()) throw input_error("cumulants_via_lattice: order exceeded");
    Rational acc(0);
    for (const auto& [type, mu] : lattice_mobius_weights(kind, n, cap)) {
        Rational prod(1);
        for (int size : type) prod *= a[size];
        acc += mu * prod;
    }
    return acc;
}

Rational full_lattice_mobius_recursive(const SetPartition& pi, int n) {
    const std::vector<SetPartition> all = combinat::set_partitions(n);
    std::map<std::vector<std::vector<int>>, Rational> memo;
    std::function<Rational(const SetPartition&)> rec = [&](const SetPartition& p) -> Rational {
        if (p.block_count() == 1) return Rational(1);
        auto it = memo.find(p.blocks);
        if (it != memo.end()) return it->second;
        Rational s(0);
        for (const auto& tau : all) {
            if (tau.block_count() >= p.block_count()) continue;
            if (combinat::refines(p, tau)) s += rec(tau);
        }
        const Rational v = -s;
        memo.emplace(p.blocks, v);
        return v;
    };
    return rec(pi);
}

sampling::StatPoly naive_kstatistic(int i) {
    if (i < 1 || i > 8) throw cap_error("naive_kstatistic: order must be in 1..8");
    sampling::StatPoly out;
    for (const auto& lambda : combinat::integer_partitions(i)) {
        const int nu = lambda.length();
        Rational head(int_factorial(nu - 1));
        if (nu % 2 == 0) head = -head;
        head *= Rational(lambda.d());

        for (const auto& pi : combinat::set_partitions(nu)) {
            Rational w = head;
            Monomial mono;
            for (const auto& block : pi.blocks) {
                const int bs = static_cast<int>(block.size());
                Rational blk_mu(int_factorial(bs - 1));
                if (bs % 2 == 0) blk_mu = -blk_mu;
                w *= blk_mu;
                int esum = 0;
                for (int pos : block) esum += lambda.parts[static_cast<size_t>(pos)];
                mono = monomial_mul(mono, monomial_of(Symbol::S(esum)));
            }
            out.add_term(mono, RationalFunctionInN(PolyN(w), PolyN::falling_factorial(nu)));
        }
    }
    return out;
}

namespace {

using multivar::MultiIndex;
using multivar::MultiMomentTable;
using Series = std::map<MultiIndex, Rational>; // ordinary coefficients

Series truncated_mul(const Series& a, const Series& b, int order) {
    Series out;
    for (const auto& [ia, ca] : a) {
        const int ta = multivar::total_order(ia);
        for (const auto& [ib, cb] : b) {
            if (ta + multivar::total_order(ib) > order) continue;
            MultiIndex sum(ia.size());
            for (size_t d = 0; d < ia.size(); ++d) sum[d] = ia[d] + ib[d];
            auto [it, inserted] = out.emplace(sum, ca * cb);
            if (!inserted) it->second += cb * ca;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero()) it = out.erase(it);
        else ++it;
    }
    return out;
}

Int index_factorial(const MultiIndex& i) {
    Int f(1);
    for (int v : i) f *= int_factorial(v);
    return f;
}

Series table_to_ordinary(const MultiMomentTable& t, int order) {
    Series s;
    for (const auto& [idx, v] : t.entries()) {
        if (multivar::total_order(idx) > order || v.is_zero()) continue;
        s[idx] = v / Rational(index_factorial(idx));
    }
    return s;
}

MultiMomentTable ordinary_to_table(const Series& s, int dim, int order) {
    return MultiMomentTable::generate(dim, order, [&](const MultiIndex& idx) {
        auto it = s.find(idx);
        if (it == s.end()) return Rational(0);
        return it->second * Rational(index_factorial(idx));
    });
}

} // namespace

MultiMomentTable multivariate_series_compose(const std::vector<Rational>& outer_univariate,
                                             const MultiMomentTable& inner, int total_order) {
    if (static_cast<int>(outer_univariate.size()) <= total_order)
        throw input_error("multivariate_series_compose: outer order too small");
    const int dim = inner.dim();
    Series u = table_to_ordinary(inner, total_order);
    u.erase(MultiIndex(static_cast<size_t>(dim), 0)); // f(inner) - 1

    Series acc;
    acc[MultiIndex(static_cast<size_t>(dim), 0)] = outer_univariate[0];
    Series upow;
    upow[MultiIndex(static_cast<size_t>(dim), 0)] = Rational(1);
    for (int k = 1; k <= total_order; ++k) {
        upow = truncated_mul(upow, u, total_order);
        if (upow.empty()) break;
        const Rational gk = outer_univariate[static_cast<size_t>(k)] /
                            Rational(int_factorial(k));
        if (gk.is_zero()) continue;
        for (const auto& [idx, c] : upow) {
            auto [it, inserted] = acc.emplace(idx, gk * c);
            if (!inserted) it->second += gk * c;
        }
    }
    return ordinary_to_table(acc, dim, total_order);
}

MultiMomentTable multivariate_series_compose(const MultiMomentTable& outer,
                                             const std::vector<MultiMomentTable>& inners,
                                             int total_order) {
    const int k = outer.dim();
    if (static_cast<int>(inners.size()) != k)
        throw input_error("multivariate_series_compose: need one inner per outer coordinate");
    const int dim = inners.at(0).dim();
    for (const auto& t : inners)
        if (t.dim() != dim) throw input_error("multivariate_series_compose: inner arity mismatch");

    std::vector<Series> u;
    u.reserve(inners.size());
    for (const auto& t : inners) {
        Series s = table_to_ordinary(t, total_order);
        s.erase(MultiIndex(static_cast<size_t>(dim), 0));
        u.push_back(std::move(s));
    }

    Series acc;
    // iterate outer indices j with |j| <= total_order
    std::vector<int> j(static_cast<size_t>(k), 0);
    std::function<void(int, int)> rec = [&](int pos, int rest) {
        if (pos == k) {
            const Rational gj = outer.at(j);
            if (gj.is_zero()) return;
            const Rational coeff = gj / Rational(index_factorial(j));
            Series prod;
            prod[MultiIndex(static_cast<size_t>(dim), 0)] = Rational(1);
            for (int c = 0; c < k; ++c)
                for (int e = 0; e < j[static_cast<size_t>(c)]; ++e)
                    prod = truncated_mul(prod, u[static_cast<size_t>(c)], total_order);
            for (const auto& [idx, v] : prod) {
                auto [it, inserted] = acc.emplace(idx, coeff * v);
                if (!inserted) it->second += coeff * v;
            }
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            j[static_cast<size_t>(pos)] = v;
            rec(pos + 1, rest - v);
        }
        j[static_cast<size_t>(pos)] = 0;
    };
    rec(0, total_order);
    return ordinary_to_table(acc, dim, total_order);
}

} // namespace momentforge::oracle
