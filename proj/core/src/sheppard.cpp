#include "momentforge/sheppard.hpp"

#include <functional>

#include "momentforge/combinat.hpp"
#include "momentforge/errors.hpp"

namespace momentforge::sheppard {

void SheppardConfig::validate() const {
    if (widths.empty()) throw input_error("sheppard config: need at least one width");
    for (const auto& h : widths)
        if (h.is_zero()) throw input_error("sheppard config: zero width");
    if (!group_counts.empty() && group_counts.size() != widths.size())
        throw input_error("sheppard config: group count arity mismatch");
    for (const auto& m : group_counts)
        if (m && *m < 1) throw input_error("sheppard config: group counts must be >= 1");
}

umbral::MomentSeq sheppard_correct(const umbral::MomentSeq& grouped, const Rational& h, int order) {
    if (order > grouped.order()) throw input_error("sheppard_correct: order exceeded");
    std::vector<Rational> out(static_cast<size_t>(order) + 1);
    out[0] = Rational(1);
    for (int i = 1; i <= order; ++i) {
        Rational s(0);
        for (int j = 0; j <= i; ++j) {
            const Rational factor = (Rational(2).pow(1 - j) - Rational(1)) *
                                    combinat::bernoulli_number(j);
            if (factor.is_zero() && j > 0) continue;
            s += Rational(int_binomial(i, j)) * factor * h.pow(j) * grouped[i - j];
        }
        out[static_cast<size_t>(i)] = s;
    }
    return umbral::MomentSeq(std::move(out));
}

std::vector<Rational> shift_moments(const Rational& h, std::optional<int> m, int order) {
    // E[(iota + 1/2)^p] and E[(-1.iota - 1/2)^p]; the two shift umbrae are
    // uncorrelated, so the combined moments are a binomial convolution.
    std::vector<Rational> s1(static_cast<size_t>(order) + 1), s2(static_cast<size_t>(order) + 1);
    const Rational half(1, 2);
    for (int p = 0; p <= order; ++p) {
        Rational a(0), b(0);
        for (int l = 0; l <= p; ++l) {
            const Rational binom(int_binomial(p, l));
            a += binom * combinat::bernoulli_number(l) * half.pow(p - l);
            // uniform moments 1/(l+1) are the moments of -1.iota
            b += binom * Rational(1, static_cast<long>(l) + 1) * (-half).pow(p - l);
        }
        s1[static_cast<size_t>(p)] = a * h.pow(p);
        const Rational hm = m ? h / Rational(static_cast<long>(*m)) : Rational(0);
        s2[static_cast<size_t>(p)] = b * hm.pow(p);
    }
    if (!m) {
        // continuous case: only the Bernoulli shift
        return s1;
    }
    std::vector<Rational> combined(static_cast<size_t>(order) + 1);
    for (int p = 0; p <= order; ++p) {
        Rational acc(0);
        for (int l = 0; l <= p; ++l)
            acc += Rational(int_binomial(p, l)) * s1[static_cast<size_t>(l)] *
                   s2[static_cast<size_t>(p - l)];
        combined[static_cast<size_t>(p)] = acc;
    }
    return combined;
}

umbral::MomentSeq sheppard_discrete(const umbral::MomentSeq& grouped, const Rational& h, int m,
                                    int order) {
    if (m < 1) throw input_error("sheppard_discrete: m must be >= 1");
    if (order > grouped.order()) throw input_error("sheppard_discrete: order exceeded");
    const std::vector<Rational> shift = shift_moments(h, m, order);
    std::vector<Rational> out(static_cast<size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) {
        Rational acc(0);
        for (int j = 0; j <= i; ++j)
            acc += Rational(int_binomial(i, j)) * grouped[j] * shift[static_cast<size_t>(i - j)];
        out[static_cast<size_t>(i)] = acc;
    }
    return umbral::MomentSeq(std::move(out));
}

multivar::MultiMomentTable sheppard_multivariate(const multivar::MultiMomentTable& grouped,
                                                 const SheppardConfig& config,
                                                 const multivar::MultiIndex& order) {
    config.validate();
    const int k = grouped.dim();
    if (static_cast<int>(config.widths.size()) != k)
        throw input_error("sheppard_multivariate: width arity mismatch");
    if (static_cast<int>(order.size()) != k)
        throw input_error("sheppard_multivariate: order arity mismatch");

    std::vector<std::vector<Rational>> shifts;
    shifts.reserve(static_cast<size_t>(k));
    for (int d = 0; d < k; ++d) {
        std::optional<int> m;
        if (!config.group_counts.empty()) m = config.group_counts[static_cast<size_t>(d)];
        shifts.push_back(shift_moments(config.widths[static_cast<size_t>(d)], m,
                                       order[static_cast<size_t>(d)]));
    }

    const int max_total = multivar::total_order(order);
    return multivar::MultiMomentTable::generate(k, max_total, [&](const multivar::MultiIndex& t) {
        // corrected m_t = sum over s <= t of prod_j C(t_j, s_j) shift_j[t_j - s_j] * grouped(s)
        Rational acc(0);
        multivar::MultiIndex s(t.size(), 0);
        std::function<void(size_t, Rational)> rec = [&](size_t pos, Rational w) {
            if (pos == t.size()) {
                acc += w * grouped.at(s);
                return;
            }
            for (int v = 0; v <= t[pos]; ++v) {
                s[pos] = v;
                const Rational factor = Rational(int_binomial(t[pos], v)) *
                                        shifts[pos][static_cast<size_t>(t[pos] - v)];
                if (!factor.is_zero()) rec(pos + 1, w * factor);
            }
            s[pos] = 0;
        };
        rec(0, Rational(1));
        return acc;
    });
}

} // namespace momentforge::sheppard
