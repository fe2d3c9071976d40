#include "momentforge/umbral.hpp"

#include "momentforge/combinat.hpp"
#include "momentforge/errors.hpp"

namespace momentforge::umbral {

using combinat::IntPartition;
using combinat::integer_partitions;

MomentSeq::MomentSeq(std::vector<Rational> moments) : moments_(std::move(moments)) {
    if (moments_.empty()) throw input_error("moment sequence needs a_0");
    if (!moments_[0].is_one()) throw input_error("moment sequence must start with a_0 = 1");
}

MomentSeq named(NamedUmbra which, int order) {
    if (order < 0) throw input_error("named umbra: negative order");
    std::vector<Rational> m(static_cast<size_t>(order) + 1);
    m[0] = Rational(1);
    for (int i = 1; i <= order; ++i) {
        Rational v;
        switch (which) {
            case NamedUmbra::Augmentation: v = Rational(0); break;
            case NamedUmbra::Unity: v = Rational(1); break;
            case NamedUmbra::Singleton: v = Rational(i == 1 ? 1 : 0); break;
            case NamedUmbra::Bell: v = Rational(combinat::bell_number(i)); break;
            case NamedUmbra::Bernoulli: v = combinat::bernoulli_number(i); break;
            case NamedUmbra::Euler: v = combinat::euler_number(i); break;
            case NamedUmbra::BooleanUnity: v = Rational(int_factorial(i)); break;
            case NamedUmbra::Catalan: v = Rational(combinat::catalan_number(i)); break;
            case NamedUmbra::Eta: v = Rational(i == 2 ? 1 : 0); break;
            case NamedUmbra::Uniform: v = Rational(1, static_cast<long>(i) + 1); break;
        }
        m[static_cast<size_t>(i)] = v;
    }
    return MomentSeq(std::move(m));
}

static Rational moment_product(const MomentSeq& a, const IntPartition& lambda) {
    Rational p(1);
    for (int part : lambda.parts) p *= a[part];
    return p;
}

Rational dot_scalar(const MomentSeq& alpha, const Rational& t, int i) {
    if (i < 0 || i > alpha.order()) throw input_error("dot_scalar: order exceeded");
    if (i == 0) return Rational(1);
    Rational s(0);
    for (const auto& lambda : integer_partitions(i))
        s += falling_factorial(t, lambda.length()) * Rational(lambda.d()) * moment_product(alpha, lambda);
    return s;
}

PolyN dot_scalar_poly(const MomentSeq& alpha, int i) {
    if (i < 0 || i > alpha.order()) throw input_error("dot_scalar_poly: order exceeded");
    if (i == 0) return PolyN::one();
    PolyN s;
    for (const auto& lambda : integer_partitions(i)) {
        const Rational w = Rational(lambda.d()) * moment_product(alpha, lambda);
        s += PolyN::falling_factorial(lambda.length()).scaled(w);
    }
    return s;
}

Rational inverse_dot(const MomentSeq& alpha, const Rational& t, int i) {
    return dot_scalar(alpha, -t, i);
}

std::vector<Rational> factorial_moments(const MomentSeq& alpha) {
    const int n = alpha.order();
    std::vector<Rational> fm(static_cast<size_t>(n) + 1);
    fm[0] = Rational(1);
    for (int i = 1; i <= n; ++i) {
        Rational s(0);
        for (int k = 1; k <= i; ++k)
            s += Rational(combinat::stirling1_signed(i, k)) * alpha[k];
        fm[static_cast<size_t>(i)] = s;
    }
    return fm;
}

MomentSeq raw_from_factorial(const std::vector<Rational>& fm) {
    if (fm.empty() || !fm[0].is_one())
        throw input_error("raw_from_factorial: sequence must start with 1");
    const int n = static_cast<int>(fm.size()) - 1;
    std::vector<Rational> m(fm.size());
    m[0] = Rational(1);
    for (int i = 1; i <= n; ++i) {
        Rational s(0);
        for (int k = 1; k <= i; ++k)
            s += Rational(combinat::stirling2(i, k)) * fm[static_cast<size_t>(k)];
        m[static_cast<size_t>(i)] = s;
    }
    return MomentSeq(std::move(m));
}

MomentSeq dot_umbra(const MomentSeq& gamma, const MomentSeq& alpha, int order) {
    if (order > gamma.order() || order > alpha.order())
        throw input_error("dot_umbra: order exceeded");
    const std::vector<Rational> gf = factorial_moments(gamma);
    std::vector<Rational> m(static_cast<size_t>(order) + 1);
    m[0] = Rational(1);
    for (int i = 1; i <= order; ++i) {
        Rational s(0);
        for (const auto& lambda : integer_partitions(i))
            s += gf[static_cast<size_t>(lambda.length())] * Rational(lambda.d()) *
                 moment_product(alpha, lambda);
        m[static_cast<size_t>(i)] = s;
    }
    return MomentSeq(std::move(m));
}

MomentSeq composition_umbra(const MomentSeq& gamma, const MomentSeq& alpha, int order) {
    if (order > gamma.order() || order > alpha.order())
        throw input_error("composition_umbra: order exceeded");
    std::vector<Rational> m(static_cast<size_t>(order) + 1);
    m[0] = Rational(1);
    for (int i = 1; i <= order; ++i) {
        Rational s(0);
        for (const auto& lambda : integer_partitions(i))
            s += Rational(lambda.d()) * gamma[lambda.length()] * moment_product(alpha, lambda);
        m[static_cast<size_t>(i)] = s;
    }
    return MomentSeq(std::move(m));
}

MomentSeq compositional_inverse(const MomentSeq& alpha, int order) {
    if (order > alpha.order()) throw input_error("compositional_inverse: order exceeded");
    if (order >= 1 && alpha[1].is_zero())
        throw input_error("compositional_inverse: first moment must be nonzero");
    // Solve sum over lambda of d_lambda h_nu a_lambda = delta_{i,1} for h,
    // order by order; the nu = i term isolates h_i a_1^i.
    std::vector<Rational> h(static_cast<size_t>(order) + 1);
    h[0] = Rational(1);
    for (int i = 1; i <= order; ++i) {
        Rational rhs = i == 1 ? Rational(1) : Rational(0);
        for (const auto& lambda : integer_partitions(i)) {
            if (lambda.length() == i) continue; // the unknown h_i term
            rhs -= Rational(lambda.d()) * h[static_cast<size_t>(lambda.length())] *
                   moment_product(alpha, lambda);
        }
        h[static_cast<size_t>(i)] = rhs / alpha[1].pow(i);
    }
    return MomentSeq(std::move(h));
}

MomentSeq disjoint_sum(const MomentSeq& a, const MomentSeq& g) {
    if (a.order() != g.order()) throw input_error("disjoint_sum: order mismatch");
    std::vector<Rational> m(a.moments());
    for (int i = 1; i <= a.order(); ++i) m[static_cast<size_t>(i)] += g[i];
    return MomentSeq(std::move(m));
}

MomentSeq scale(const MomentSeq& a, const Rational& c) {
    std::vector<Rational> m(a.moments());
    Rational p(1);
    for (int i = 1; i <= a.order(); ++i) {
        p *= c;
        m[static_cast<size_t>(i)] *= p;
    }
    return MomentSeq(std::move(m));
}

MomentSeq convolve(const MomentSeq& a, const MomentSeq& g) {
    if (a.order() != g.order()) throw input_error("convolve: order mismatch");
    const int n = a.order();
    std::vector<Rational> m(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        Rational s(0);
        for (int k = 0; k <= i; ++k)
            s += Rational(int_binomial(i, k)) * a[k] * g[i - k];
        m[static_cast<size_t>(i)] = s;
    }
    return MomentSeq(std::move(m));
}

static MomentSeq levy_cumulant_umbra(const Rational& c0, const Rational& s,
                                     const MomentSeq& nu, int order) {
    if (order >= 1 && !nu[1].is_zero())
        throw input_error("levy_moments: jump part must be compensated (zero first moment)");
    std::vector<Rational> kappa(static_cast<size_t>(order) + 1);
    kappa[0] = Rational(1);
    for (int i = 1; i <= order; ++i) {
        Rational v = i <= nu.order() ? nu[i] : Rational(0);
        if (i == 1) v += c0;
        if (i == 2) v += s * s;
        kappa[static_cast<size_t>(i)] = v;
    }
    return MomentSeq(std::move(kappa));
}

MomentSeq levy_moments(const Rational& c0, const Rational& s, const MomentSeq& nu,
                       const Rational& t, int order) {
    const MomentSeq kappa = levy_cumulant_umbra(c0, s, nu, order);
    // moments of t.beta.kappa: sum d_lambda t^nu kappa_lambda
    std::vector<Rational> m(static_cast<size_t>(order) + 1);
    m[0] = Rational(1);
    for (int i = 1; i <= order; ++i) {
        Rational acc(0);
        for (const auto& lambda : integer_partitions(i))
            acc += Rational(lambda.d()) * t.pow(lambda.length()) * moment_product(kappa, lambda);
        m[static_cast<size_t>(i)] = acc;
    }
    return MomentSeq(std::move(m));
}

std::vector<PolyN> levy_moments_poly(const Rational& c0, const Rational& s,
                                     const MomentSeq& nu, int order) {
    const MomentSeq kappa = levy_cumulant_umbra(c0, s, nu, order);
    std::vector<PolyN> m(static_cast<size_t>(order) + 1);
    m[0] = PolyN::one();
    for (int i = 1; i <= order; ++i) {
        PolyN acc;
        for (const auto& lambda : integer_partitions(i))
            acc += PolyN::monomial(lambda.length(),
                                   Rational(lambda.d()) * moment_product(kappa, lambda));
        m[static_cast<size_t>(i)] = acc;
    }
    return m;
}

} // namespace momentforge::umbral
