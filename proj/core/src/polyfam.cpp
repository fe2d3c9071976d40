#include "momentforge/polyfam.hpp"

#include <functional>

#include "momentforge/combinat.hpp"
#include "momentforge/config.hpp"
#include "momentforge/errors.hpp"

namespace momentforge::polyfam {

using combinat::IntPartition;
using combinat::integer_partitions;
using umbral::MomentSeq;
using umbral::NamedUmbra;

// polynomial in t with t replaced by c*t
static PolyN rescale_variable(const PolyN& p, const Rational& c) {
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(p.degree()) + 1);
    Rational pw(1);
    for (int d = 0; d <= p.degree(); ++d) {
        out.push_back(p.coeff(d) * pw);
        pw *= c;
    }
    return PolyN::from_coeffs(std::move(out));
}

// q_m(-T) as a polynomial in T
static PolyN q_at_minus(const MomentSeq& alpha, int m) {
    return rescale_variable(umbral::dot_scalar_poly(alpha, m), Rational(-1));
}

static XTPoly xt_from(const PolyN& in_time, const Symbol& time_sym, int x_power) {
    XTPoly out;
    for (int d = 0; d <= in_time.degree(); ++d) {
        const Rational c = in_time.coeff(d);
        if (c.is_zero()) continue;
        Monomial mono;
        if (x_power > 0) mono[Symbol::x()] = x_power;
        if (d > 0) mono[time_sym] = d;
        out.add_term(mono, c);
    }
    return out;
}

static XTPoly tsh_polynomial_with(const MomentSeq& alpha, int i, const Symbol& time_sym,
                                  const Rational& time_scale) {
    if (i < 0 || i > alpha.order()) throw input_error("tsh_polynomial: order exceeded");
    XTPoly out;
    for (int j = 0; j <= i; ++j) {
        PolyN q = q_at_minus(alpha, i - j);
        if (!time_scale.is_one()) q = rescale_variable(q, time_scale);
        out += xt_from(q.scaled(Rational(int_binomial(i, j))), time_sym, j);
    }
    return out;
}

XTPoly tsh_polynomial(const MomentSeq& alpha, int i) {
    return tsh_polynomial_with(alpha, i, Symbol::t(), Rational(1));
}

void FamilySpec::validate() const {
    switch (name) {
        case FamilyName::Hermite:
            if (s.is_zero()) throw input_error("hermite: scale must be nonzero");
            break;
        case FamilyName::PoissonCharlier:
        case FamilyName::Actuarial:
            if (lambda.sign() <= 0) throw input_error("family: lambda must be positive");
            break;
        case FamilyName::Meixner1:
        case FamilyName::Krawtchouk:
            if (p.sign() <= 0 || p >= Rational(1))
                throw input_error("family: p must satisfy 0 < p < 1");
            break;
        case FamilyName::PseudoNarumi:
            if (a < 1) throw input_error("pseudo-narumi: a must be a positive integer");
            break;
        case FamilyName::LevySheffer:
            if (!alpha || !gamma) throw input_error("levy-sheffer: needs alpha and gamma");
            if (gamma->order() >= 1 && (*gamma)[1].is_zero())
                throw input_error("levy-sheffer: gamma needs a nonzero first moment");
            break;
        default:
            break;
    }
}

Symbol family_time_symbol(FamilyName name) {
    switch (name) {
        case FamilyName::BernoulliTSH:
        case FamilyName::EulerTSH:
        case FamilyName::Krawtchouk:
        case FamilyName::PseudoNarumi:
            return Symbol::n();
        default:
            return Symbol::t();
    }
}

static MomentSeq gaussian_moments(const Rational& s, int order) {
    std::vector<Rational> m(static_cast<size_t>(order) + 1, Rational(0));
    m[0] = Rational(1);
    const Rational s2 = s * s;
    for (int i = 2; i <= order; i += 2) {
        // (2k)!/(2^k k!) s^{2k}
        const int k = i / 2;
        m[static_cast<size_t>(i)] =
            Rational(int_factorial(i), Int(1) << static_cast<unsigned>(k)) /
            Rational(int_factorial(k)) * s2.pow(k);
    }
    return MomentSeq(std::move(m));
}

// moments of (-1.xi + u)/2, the Bernoulli(1/2) increment
static MomentSeq euler_walk_base(int order) {
    const MomentSeq xi = umbral::named(NamedUmbra::Euler, order);
    std::vector<Rational> inv(static_cast<size_t>(order) + 1);
    for (int j = 0; j <= order; ++j) inv[static_cast<size_t>(j)] = umbral::dot_scalar(xi, Rational(-1), j);
    MomentSeq conv = umbral::convolve(MomentSeq(std::move(inv)),
                                      umbral::named(NamedUmbra::Unity, order));
    return umbral::scale(conv, Rational(1, 2));
}

// moments all equal to p (Bernoulli(p) increment)
static MomentSeq bernoulli_p_moments(const Rational& p, int order) {
    std::vector<Rational> m(static_cast<size_t>(order) + 1, p);
    m[0] = Rational(1);
    return MomentSeq(std::move(m));
}

// Meixner / Krawtchouk process increment: boolean-unity composed over d.beta
static MomentSeq meixner_base(const Rational& d, int order) {
    std::vector<Rational> phi(static_cast<size_t>(order) + 1);
    phi[0] = Rational(1);
    for (int j = 1; j <= order; ++j) {
        Rational acc(0);
        for (int k = 1; k <= j; ++k)
            acc += Rational(combinat::stirling2(j, k)) * d.pow(k);
        phi[static_cast<size_t>(j)] = acc;
    }
    return umbral::dot_umbra(umbral::named(NamedUmbra::BooleanUnity, order),
                             MomentSeq(std::move(phi)), order);
}

umbral::MomentSeq family_base(const FamilySpec& spec, int order) {
    spec.validate();
    switch (spec.name) {
        case FamilyName::Hermite:
            return gaussian_moments(spec.s, order);
        case FamilyName::PoissonCharlier:
            return umbral::named(NamedUmbra::Bell, order);
        case FamilyName::Laguerre:
        case FamilyName::Actuarial:
            return umbral::named(NamedUmbra::BooleanUnity, order);
        case FamilyName::Meixner1:
            return meixner_base(spec.p / (Rational(1) - spec.p), order);
        case FamilyName::BernoulliTSH:
        case FamilyName::PseudoNarumi:
            return umbral::named(NamedUmbra::Uniform, order);
        case FamilyName::EulerTSH:
            return euler_walk_base(order);
        case FamilyName::Krawtchouk:
            return bernoulli_p_moments(spec.p, order);
        case FamilyName::LevySheffer: {
            MomentSeq g = *spec.gamma;
            if (g.order() < order) throw input_error("levy-sheffer: gamma order too small");
            MomentSeq a = *spec.alpha;
            if (a.order() < order) throw input_error("levy-sheffer: alpha order too small");
            const MomentSeq gcop = umbral::compositional_inverse(
                MomentSeq(std::vector<Rational>(g.moments().begin(),
                                                g.moments().begin() + order + 1)),
                order);
            return umbral::composition_umbra(
                MomentSeq(std::vector<Rational>(a.moments().begin(),
                                                a.moments().begin() + order + 1)),
                gcop, order);
        }
    }
    throw input_error("family_base: unknown family");
}

Rational family_time_scale(const FamilySpec& spec) {
    switch (spec.name) {
        case FamilyName::PoissonCharlier:
        case FamilyName::Actuarial:
            return spec.lambda;
        case FamilyName::PseudoNarumi:
            return Rational(spec.a);
        default:
            return Rational(1);
    }
}

std::vector<PolyN> family_process_moments(const FamilySpec& spec, int max_order) {
    const MomentSeq base = family_base(spec, max_order);
    const Rational scale = family_time_scale(spec);
    std::vector<PolyN> out(static_cast<size_t>(max_order) + 1);
    for (int j = 0; j <= max_order; ++j) {
        PolyN q = umbral::dot_scalar_poly(base, j);
        out[static_cast<size_t>(j)] = scale.is_one() ? q : rescale_variable(q, scale);
    }
    return out;
}

// partial Bell column transform: sum_i jacobi[i] * B_{k,i}(m_1..m_{k-i+1})
static XTPoly bell_transformed_family(const MomentSeq& base, const Symbol& time_sym,
                                      const Rational& time_scale, int k,
                                      const std::vector<Rational>& m_args) {
    XTPoly out;
    for (int i = 1; i <= k; ++i) {
        const Rational b = bell_partial(k, i, m_args);
        if (b.is_zero()) continue;
        out += tsh_polynomial_with(base, i, time_sym, time_scale).scaled(b);
    }
    return out;
}

// classical cumulants of a moment sequence, as a sequence usable for m_i args
static std::vector<Rational> chi_dot_moments(const MomentSeq& w) {
    const MomentSeq c = umbral::dot_umbra(umbral::named(NamedUmbra::Singleton, w.order()), w,
                                          w.order());
    std::vector<Rational> out(w.moments().begin(), w.moments().end());
    for (int j = 0; j <= w.order(); ++j) out[static_cast<size_t>(j)] = c[j];
    return out;
}

XTPoly family(const FamilySpec& spec, int k) {
    spec.validate();
    if (k < 0) throw input_error("family: negative degree");
    const Symbol time_sym = family_time_symbol(spec.name);
    const MomentSeq base = family_base(spec, k);
    const Rational scale = family_time_scale(spec);

    switch (spec.name) {
        case FamilyName::Hermite:
        case FamilyName::Laguerre:
        case FamilyName::BernoulliTSH:
        case FamilyName::EulerTSH:
            return tsh_polynomial_with(base, k, time_sym, scale);

        case FamilyName::PoissonCharlier: {
            // Stirling-1 transform of the Q basis
            XTPoly out;
            for (int j = 1; j <= k; ++j) {
                const Rational s1(combinat::stirling1_signed(k, j));
                if (s1.is_zero()) continue;
                out += tsh_polynomial_with(base, j, time_sym, scale).scaled(s1);
            }
            return out;
        }

        case FamilyName::Actuarial: {
            std::vector<Rational> m(static_cast<size_t>(k) + 1, Rational(0));
            for (int i = 1; i <= k; ++i) {
                m[static_cast<size_t>(i)] = -Rational(int_factorial(i - 1));
            }
            return bell_transformed_family(base, time_sym, scale, k, m);
        }

        case FamilyName::Meixner1: {
            // m_i = E[(chi.(-1.chi + chi / p))^i]
            const int order = k;
            std::vector<Rational> w(static_cast<size_t>(order) + 1);
            w[0] = Rational(1);
            for (int j = 1; j <= order; ++j) {
                Rational u(int_factorial(j));
                if (j % 2 != 0) u = -u; // moments of -1.chi are (-1)^j j!
                Rational prev(int_factorial(j - 1));
                if ((j - 1) % 2 != 0) prev = -prev;
                w[static_cast<size_t>(j)] = u + Rational(j) * prev / spec.p;
            }
            return bell_transformed_family(base, time_sym, scale, k,
                                           chi_dot_moments(MomentSeq(std::move(w))));
        }

        case FamilyName::Krawtchouk: {
            const Rational d = spec.p / (Rational(1) - spec.p);
            const int order = k;
            std::vector<Rational> w(static_cast<size_t>(order) + 1);
            w[0] = Rational(1);
            for (int j = 1; j <= order; ++j) {
                Rational u(int_factorial(j));
                if (j % 2 != 0) u = -u;
                Rational prev(int_factorial(j - 1));
                if ((j - 1) % 2 != 0) prev = -prev;
                w[static_cast<size_t>(j)] = u - Rational(j) * prev / d;
            }
            return bell_transformed_family(base, time_sym, scale, k,
                                           chi_dot_moments(MomentSeq(std::move(w))));
        }

        case FamilyName::PseudoNarumi: {
            std::vector<Rational> m(static_cast<size_t>(k) + 1, Rational(0));
            for (int i = 1; i <= k; ++i) {
                Rational v(int_factorial(i - 1));
                m[static_cast<size_t>(i)] = (i % 2 == 0) ? -v : v;
            }
            return bell_transformed_family(base, time_sym, scale, k, m);
        }

        case FamilyName::LevySheffer: {
            std::vector<Rational> g(spec.gamma->moments());
            return bell_transformed_family(base, time_sym, scale, k, g);
        }
    }
    throw input_error("family: unknown family");
}

PolyN appell_bernoulli_euler(AppellKind kind, int i) {
    if (i < 0) throw input_error("appell: negative degree");
    std::vector<Rational> shift(static_cast<size_t>(i) + 1);
    if (kind == AppellKind::Bernoulli) {
        for (int j = 0; j <= i; ++j) shift[static_cast<size_t>(j)] = combinat::bernoulli_number(j);
    } else {
        const MomentSeq xi = umbral::named(NamedUmbra::Euler, i);
        for (int j = 0; j <= i; ++j) {
            Rational acc(0);
            for (int l = 0; l <= j; ++l) {
                Rational term = Rational(int_binomial(j, l)) * xi[l];
                if ((j - l) % 2 != 0) term = -term;
                acc += term;
            }
            shift[static_cast<size_t>(j)] = acc / Rational(2).pow(j);
        }
    }
    std::vector<Rational> coeffs(static_cast<size_t>(i) + 1);
    for (int j = 0; j <= i; ++j)
        coeffs[static_cast<size_t>(j)] =
            Rational(int_binomial(i, j)) * shift[static_cast<size_t>(i - j)];
    return PolyN::from_coeffs(std::move(coeffs));
}

PolyN exponential_polynomial(int i) {
    if (i < 0) throw input_error("exponential_polynomial: negative degree");
    std::vector<Rational> c(static_cast<size_t>(i) + 1, Rational(0));
    if (i == 0) c[0] = Rational(1);
    for (int k = 1; k <= i; ++k) c[static_cast<size_t>(k)] = Rational(combinat::stirling2(i, k));
    return PolyN::from_coeffs(std::move(c));
}

Rational bell_partial(int i, int k, const std::vector<Rational>& args) {
    if (i < 0 || k < 0 || k > i) return Rational(0);
    if (i == 0) return Rational(1);
    if (static_cast<int>(args.size()) < i - k + 2)
        throw input_error("bell_partial: not enough arguments");
    Rational acc(0);
    for (const auto& lambda : integer_partitions(i)) {
        if (lambda.length() != k) continue;
        Rational prod(1);
        for (int part : lambda.parts) prod *= args[static_cast<size_t>(part)];
        acc += Rational(lambda.d()) * prod;
    }
    return acc;
}

Rational bell_complete(int i, const std::vector<Rational>& args) {
    if (i == 0) return Rational(1);
    if (static_cast<int>(args.size()) < i + 1)
        throw input_error("bell_complete: not enough arguments");
    Rational acc(0);
    for (int k = 1; k <= i; ++k) acc += bell_partial(i, k, args);
    return acc;
}

PolyN generalized_bell_poly(const MomentSeq& gamma, int i, int k) {
    if (k > i || k < 0) throw input_error("generalized_bell: k must satisfy 0 <= k <= i");
    if (gamma.order() < i - k) throw input_error("generalized_bell: gamma order too small");
    // C(i,k) sum_j C(i-k, j) x^j q_{i-k-j}(k)
    std::vector<Rational> coeffs(static_cast<size_t>(i - k) + 1);
    for (int j = 0; j <= i - k; ++j)
        coeffs[static_cast<size_t>(j)] = Rational(int_binomial(i - k, j)) *
                                         umbral::dot_scalar(gamma, Rational(k), i - k - j);
    return PolyN::from_coeffs(std::move(coeffs)).scaled(Rational(int_binomial(i, k)));
}

Rational generalized_bell_at(const MomentSeq& gamma, int i, int k, const MomentSeq& alpha) {
    const PolyN p = generalized_bell_poly(gamma, i, k);
    if (alpha.order() < p.degree()) throw input_error("generalized_bell: alpha order too small");
    Rational acc(0);
    for (int j = 0; j <= p.degree(); ++j) acc += p.coeff(j) * alpha[j];
    return acc;
}

PolyN sheffer_polynomial(const MomentSeq& alpha, const MomentSeq& gamma, int i) {
    if (i > alpha.order() || i > gamma.order())
        throw input_error("sheffer_polynomial: order exceeded");
    if (i >= 1 && gamma[1].is_zero())
        throw input_error("sheffer_polynomial: gamma needs a nonzero first moment");
    const MomentSeq gcop = umbral::compositional_inverse(gamma, i);
    // (x.gamma*)_j = sum over partitions of j of d x^{nu} gcop_lambda
    std::vector<PolyN> adjoint_pow(static_cast<size_t>(i) + 1);
    adjoint_pow[0] = PolyN::one();
    for (int j = 1; j <= i; ++j) {
        PolyN acc;
        for (const auto& lambda : integer_partitions(j)) {
            Rational prod(1);
            for (int part : lambda.parts) prod *= gcop[part];
            acc += PolyN::monomial(lambda.length(), Rational(lambda.d()) * prod);
        }
        adjoint_pow[static_cast<size_t>(j)] = acc;
    }
    PolyN out;
    for (int j = 0; j <= i; ++j)
        out += adjoint_pow[static_cast<size_t>(j)].scaled(Rational(int_binomial(i, j)) *
                                                          alpha[i - j]);
    return out;
}

// primitive umbra of phi: moments phi_{j+1} / (j+1)
static MomentSeq primitive(const MomentSeq& phi, int order) {
    if (phi.order() < order + 1) throw input_error("primitive: order too small");
    std::vector<Rational> m(static_cast<size_t>(order) + 1);
    m[0] = Rational(1);
    for (int j = 1; j <= order; ++j)
        m[static_cast<size_t>(j)] = phi[j + 1] / Rational(static_cast<long>(j) + 1);
    return MomentSeq(std::move(m));
}

// coefficient matrix via the generalized Bell / primitive representation:
// rows i = 0..order, entries k = 0..i of E[B^{(phi_P)}_{i,k}(rho)]
static std::vector<std::vector<Rational>> bell_coefficient_matrix(const MomentSeq& rho,
                                                                  const MomentSeq& phi,
                                                                  int order) {
    if (phi.order() < 1 || !phi[1].is_one())
        throw input_error("coefficient matrix: the composed umbra must have first moment 1");
    const MomentSeq phi_p = primitive(phi, order);
    std::vector<std::vector<Rational>> mat;
    mat.reserve(static_cast<size_t>(order) + 1);
    for (int i = 0; i <= order; ++i) {
        std::vector<Rational> row;
        row.reserve(static_cast<size_t>(i) + 1);
        for (int k = 0; k <= i; ++k)
            row.push_back(generalized_bell_at(phi_p, i, k, rho));
        mat.push_back(std::move(row));
    }
    return mat;
}

std::vector<std::vector<Rational>> sheffer_coefficients(const MomentSeq& alpha,
                                                        const MomentSeq& gamma, int order) {
    if (order + 1 > gamma.order() || order > alpha.order())
        throw input_error("sheffer_coefficients: order exceeded");
    const MomentSeq gcop = umbral::compositional_inverse(gamma, order + 1);
    return bell_coefficient_matrix(alpha, gcop, order);
}

std::vector<std::vector<Rational>> riordan_array(const MomentSeq& g_part,
                                                 const MomentSeq& f_part, int order) {
    if (order + 1 > f_part.order() || order > g_part.order())
        throw input_error("riordan_array: order exceeded");
    return bell_coefficient_matrix(g_part, f_part, order);
}

std::vector<std::vector<Rational>> connection_constants(const MomentSeq& alpha,
                                                        const MomentSeq& gamma,
                                                        const MomentSeq& xi,
                                                        const MomentSeq& zeta, int order) {
    const int n = order + 1; // the primitive needs one extra order
    auto fit = [n](const MomentSeq& m) {
        if (m.order() < n) throw input_error("connection_constants: order exceeded");
        return MomentSeq(std::vector<Rational>(m.moments().begin(), m.moments().begin() + n + 1));
    };
    const MomentSeq a = fit(alpha), g = fit(gamma), x = fit(xi), z = fit(zeta);
    if (g[1].is_zero() || z[1].is_zero())
        throw input_error("connection_constants: gamma and zeta need nonzero first moments");

    const MomentSeq zcop = umbral::compositional_inverse(z, n);
    // f-part: gamma . beta . zeta^<-1>
    const MomentSeq psi = umbral::composition_umbra(g, zcop, n);
    // g-part: (-1.(alpha.beta.gamma) + xi.beta.zeta) . beta . zeta^<-1>
    const MomentSeq abg = umbral::composition_umbra(a, g, n);
    std::vector<Rational> neg(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) neg[static_cast<size_t>(j)] = umbral::dot_scalar(abg, Rational(-1), j);
    const MomentSeq theta = umbral::convolve(MomentSeq(std::move(neg)),
                                             umbral::composition_umbra(x, z, n));
    const MomentSeq rho = umbral::composition_umbra(theta, zcop, n);
    return bell_coefficient_matrix(rho, psi, order);
}

umbral::MomentSeq lagrange_inverse(const MomentSeq& gamma, int order) {
    // derivative umbra has moments i*g_{i-1}; its first moment is g_0 = 1
    if (gamma.order() < order) throw input_error("lagrange_inverse: order exceeded");
    std::vector<Rational> m(static_cast<size_t>(order) + 1);
    m[0] = Rational(1);
    for (int i = 1; i <= order; ++i)
        m[static_cast<size_t>(i)] = umbral::dot_scalar(gamma, Rational(-i), i - 1);
    return MomentSeq(std::move(m));
}

SparsePoly<Rational> kailath_segall(int i) {
    if (i < 0) throw input_error("kailath_segall: negative order");
    std::vector<SparsePoly<Rational>> P(static_cast<size_t>(i) + 1);
    P[0] = SparsePoly<Rational>(Rational(1));
    for (int m = 1; m <= i; ++m) {
        SparsePoly<Rational> acc;
        for (int j = 1; j <= m; ++j) {
            SparsePoly<Rational> term =
                P[static_cast<size_t>(m - j)] *
                SparsePoly<Rational>::from_symbol(Symbol::X_var(j), Rational(1));
            if (j % 2 == 0) acc -= term;
            else acc += term;
        }
        P[static_cast<size_t>(m)] = acc.scaled(Rational(1, m));
    }
    return P[static_cast<size_t>(i)];
}

SparsePoly<Rational> volume_polynomial_sym(int i, std::optional<int> cap) {
    SparsePoly<Rational> out;
    const Rational w(Int(1), int_factorial(i));
    for (const auto& p : combinat::parking_functions(i, cap)) {
        Monomial mono;
        for (int v : p) mono = monomial_mul(mono, monomial_of(Symbol::x(v)));
        out.add_term(mono, w);
    }
    return out;
}

Rational volume_polynomial(int i, const std::vector<Rational>& values, std::optional<int> cap) {
    if (static_cast<int>(values.size()) < i + 1)
        throw input_error("volume_polynomial: need values[0..i]");
    Rational acc(0);
    for (const auto& p : combinat::parking_functions(i, cap)) {
        std::map<int, int> mult;
        for (int v : p) ++mult[v];
        Rational prod(1);
        for (const auto& [v, e] : mult) prod *= values[static_cast<size_t>(e)];
        acc += prod;
    }
    return acc / Rational(int_factorial(i));
}

} // namespace momentforge::polyfam
