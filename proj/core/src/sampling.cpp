#include "momentforge/sampling.hpp"

#include <algorithm>
#include <functional>

#include "momentforge/config.hpp"
#include "momentforge/errors.hpp"

namespace momentforge::sampling {

using combinat::IntPartition;
using combinat::integer_partitions;

// mu_m = (-1)^{m-1} (m-1)!, the top Mobius value on Pi_m; also E[(chi.chi)^m].
static Rational mu_top(int m) {
    Rational v(int_factorial(m - 1));
    return (m % 2 == 0) ? -v : v;
}

// p_j(y) = sum_k (-1)^{k-1} (k-1)! S(j,k) y^k
static PolyN p_poly(int j) {
    std::vector<Rational> c(static_cast<size_t>(j) + 1, Rational(0));
    for (int k = 1; k <= j; ++k)
        c[static_cast<size_t>(k)] = mu_top(k) * Rational(combinat::stirling2(j, k));
    return PolyN::from_coeffs(std::move(c));
}

// y^m -> mu_m / (n)_m applied to a polynomial in y
static RationalFunctionInN eval_device_powers(const PolyN& poly_in_y) {
    RationalFunctionInN acc;
    for (int m = 1; m <= poly_in_y.degree(); ++m) {
        const Rational c = poly_in_y.coeff(m);
        if (c.is_zero()) continue;
        acc += RationalFunctionInN(PolyN(c * mu_top(m)), PolyN::falling_factorial(m));
    }
    return acc;
}

StatPoly k_statistic(int i, std::optional<int> cap) {
    const int limit = config::resolve_cap(cap, config::caps().kstat);
    if (i < 1) throw input_error("k_statistic: order must be positive");
    if (i > limit) throw cap_error("k_statistic: order exceeds cap");

    std::vector<PolyN> p(static_cast<size_t>(i) + 1);
    for (int j = 1; j <= i; ++j) p[static_cast<size_t>(j)] = p_poly(j);

    StatPoly out;
    for (const auto& lambda : integer_partitions(i)) {
        PolyN prod = PolyN::one();
        Monomial mono;
        for (const auto& [part, mult] : lambda.multiplicities()) {
            for (int r = 0; r < mult; ++r) prod *= p[static_cast<size_t>(part)];
            mono[Symbol::S(part)] = mult;
        }
        out.add_term(mono, eval_device_powers(prod) * RationalFunctionInN(Rational(lambda.d())));
    }
    return out;
}

StatPoly augmented_to_powersums(const std::vector<int>& theta) {
    // collapse to (distinct exponent, multiplicity)
    std::map<int, int> mult;
    for (int e : theta) {
        if (e < 1) throw input_error("augmented_to_powersums: exponents must be positive");
        ++mult[e];
    }
    std::vector<int> values, f;
    for (const auto& [v, c] : mult) {
        values.push_back(v);
        f.push_back(c);
    }
    StatPoly out;
    for (const auto& sub : combinat::multiset_subdivisions(f)) {
        Rational w(sub.d_S);
        Monomial mono;
        for (const auto& [blk, g] : sub.blocks) {
            int size = 0, esum = 0;
            for (size_t l = 0; l < blk.size(); ++l) {
                size += blk[l];
                esum += blk[l] * values[l];
            }
            w *= mu_top(size).pow(g);
            mono = monomial_mul(mono, monomial_of(Symbol::S(esum), g));
        }
        out.add_term(mono, RationalFunctionInN(w));
    }
    return out;
}

StatPoly polykay(const std::vector<int>& indices, std::optional<int> cap) {
    const int limit = config::resolve_cap(cap, config::caps().kstat);
    if (indices.empty()) throw input_error("polykay: need at least one index");
    int total = 0;
    for (int r : indices) {
        if (r < 1) throw input_error("polykay: indices must be positive");
        total += r;
    }
    if (total > limit) throw cap_error("polykay: total order exceeds cap");

    std::vector<std::vector<IntPartition>> parts;
    parts.reserve(indices.size());
    for (int r : indices) parts.push_back(integer_partitions(r));

    std::map<std::vector<int>, StatPoly> aug_cache;
    StatPoly out;
    std::vector<const IntPartition*> pick(indices.size(), nullptr);

    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == indices.size()) {
            Rational w(1);
            int nu_total = 0;
            std::vector<int> merged;
            for (const auto* lp : pick) {
                w *= mu_top(lp->length()) * Rational(lp->d());
                nu_total += lp->length();
                merged.insert(merged.end(), lp->parts.begin(), lp->parts.end());
            }
            std::sort(merged.begin(), merged.end());
            auto it = aug_cache.find(merged);
            if (it == aug_cache.end())
                it = aug_cache.emplace(merged, augmented_to_powersums(merged)).first;
            const RationalFunctionInN scale(PolyN(w), PolyN::falling_factorial(nu_total));
            out += it->second.scaled(scale);
            return;
        }
        for (const auto& lambda : parts[pos]) {
            pick[pos] = &lambda;
            rec(pos + 1);
        }
    };
    rec(0);
    return out;
}

JointMomentTable JointMomentTable::symbolic(int dim, int max_total) {
    JointMomentTable t;
    t.dim = dim;
    std::vector<int> idx(static_cast<size_t>(dim), 0);
    std::function<void(int, int)> rec = [&](int pos, int rest) {
        if (pos == dim) {
            t.entries.emplace(idx, std::nullopt);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            idx[static_cast<size_t>(pos)] = v;
            rec(pos + 1, rest - v);
        }
        idx[static_cast<size_t>(pos)] = 0;
    };
    rec(0, max_total);
    return t;
}

StatPoly expectation_of_product(const std::vector<std::pair<DotFactor, int>>& factors,
                                const JointMomentTable& joints,
                                std::optional<int> cap) {
    const int limit = config::resolve_cap(cap, config::caps().enumeration);

    // merge identical factor monomials into one multiset element
    std::map<DotFactor, int> merged;
    for (const auto& [f, pow] : factors) {
        if (pow < 0) throw input_error("expectation_of_product: negative power");
        if (pow > 0) merged[f] += pow;
    }
    std::vector<DotFactor> elems;
    std::vector<int> mult;
    int total = 0;
    for (const auto& [f, c] : merged) {
        if (static_cast<int>(f.exponents.size()) != joints.dim)
            throw input_error("expectation_of_product: factor dimension mismatch");
        elems.push_back(f);
        mult.push_back(c);
        total += c;
    }
    if (total > limit) throw cap_error("expectation_of_product: degree exceeds cap");
    if (total == 0) return StatPoly(RationalFunctionInN(Rational(1)));

    StatPoly out;
    for (const auto& sub : combinat::multiset_subdivisions(mult)) {
        Rational numeric(sub.d_S);
        Monomial mono;
        bool zero = false;
        for (const auto& [blk, g] : sub.blocks) {
            // correlated singletons: two tag occurrences in one block kill it
            std::map<int, int> tag_count;
            for (size_t e = 0; e < blk.size(); ++e)
                for (int tag : elems[e].tags) tag_count[tag] += blk[e];
            for (const auto& [tag, c] : tag_count)
                if (c >= 2) { zero = true; break; }
            if (zero) break;

            std::vector<int> idx(static_cast<size_t>(joints.dim), 0);
            for (size_t e = 0; e < blk.size(); ++e)
                for (int d = 0; d < joints.dim; ++d)
                    idx[static_cast<size_t>(d)] += blk[e] * elems[e].exponents[static_cast<size_t>(d)];

            auto it = joints.entries.find(idx);
            if (it == joints.entries.end())
                throw input_error("expectation_of_product: undeclared joint moment");
            if (it->second.has_value()) {
                numeric *= it->second->pow(g);
                if (numeric.is_zero()) { zero = true; break; }
            } else {
                mono = monomial_mul(mono, monomial_of(Symbol::m(idx), g));
            }
        }
        if (zero) continue;
        const RationalFunctionInN coeff =
            RationalFunctionInN::from_poly(PolyN::falling_factorial(sub.block_count()).scaled(numeric));
        out.add_term(mono, coeff);
    }
    return out;
}

std::vector<AugmentedTerm> power_to_augmented(int i) {
    std::vector<AugmentedTerm> out;
    for (const auto& lambda : integer_partitions(i)) {
        AugmentedTerm t{lambda, lambda.d(), lambda.length()};
        out.push_back(std::move(t));
    }
    return out;
}

Rational partition_mobius(const combinat::SetPartition& tau, const combinat::SetPartition& pi) {
    if (!combinat::refines(tau, pi))
        throw input_error("partition_mobius: tau must refine pi");
    // class of [tau, pi]: r_j = number of pi-blocks that are unions of j tau-blocks
    std::vector<int> where(static_cast<size_t>(pi.ground_size()), -1);
    for (size_t j = 0; j < pi.blocks.size(); ++j)
        for (int e : pi.blocks[j]) where[static_cast<size_t>(e)] = static_cast<int>(j);
    std::map<int, int> unions; // pi block -> count of tau blocks inside
    for (const auto& b : tau.blocks) ++unions[where[static_cast<size_t>(b[0])]];
    Rational v(1);
    const int n = tau.block_count(), r = pi.block_count();
    for (const auto& kv : unions) v *= Rational(int_factorial(kv.second - 1));
    if ((n - r) % 2 != 0) v = -v;
    return v;
}

std::map<std::vector<int>, Rational> moments_polykays_mobius(MobiusDirection direction,
                                                             const combinat::SetPartition& pi,
                                                             std::optional<int> cap) {
    const int n = pi.ground_size();
    std::map<std::vector<int>, Rational> out;
    for (const auto& tau : combinat::set_partitions(n, cap)) {
        if (!combinat::refines(tau, pi)) continue;
        const Rational w = direction == MobiusDirection::Products
                               ? Rational(1)
                               : partition_mobius(tau, pi);
        auto [it, inserted] = out.emplace(tau.type(), w);
        if (!inserted) it->second += w;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero()) it = out.erase(it);
        else ++it;
    }
    return out;
}

Rational evaluate_at_sample(const StatPoly& stat, const std::vector<Rational>& data) {
    const Rational n(static_cast<long>(data.size()));
    auto power_sum = [&](int r) {
        Rational s(0);
        for (const auto& x : data) s += x.pow(r);
        return s;
    };
    Rational total(0);
    for (const auto& [mono, coeff] : stat.terms()) {
        Rational term = coeff.eval(n);
        for (const auto& [sym, e] : mono) {
            if (sym.kind != Symbol::Kind::PowerSum)
                throw input_error("evaluate_at_sample: non power-sum symbol");
            term *= power_sum(sym.index).pow(e);
        }
        total += term;
    }
    return total;
}

} // namespace momentforge::sampling
