#pragma once

#include <optional>
#include <vector>

#include "momentforge/poly.hpp"
#include "momentforge/sparse_poly.hpp"
#include "momentforge/umbral.hpp"

namespace momentforge::polyfam {

/// Bivariate polynomial in x and a time symbol (t, or n for random walks).
using XTPoly = SparsePoly<Rational>;

/// Q_i(x, t) = sum_j C(i,j) x^j q_{i-j}(-t), time-space harmonic for the
/// process generated by alpha.
XTPoly tsh_polynomial(const umbral::MomentSeq& alpha, int i);

enum class FamilyName {
    Hermite,
    PoissonCharlier,
    Laguerre,
    Actuarial,
    Meixner1,
    BernoulliTSH,
    EulerTSH,
    Krawtchouk,
    PseudoNarumi,
    LevySheffer,
};

struct FamilySpec {
    FamilyName name = FamilyName::Hermite;
    Rational s = Rational(1);          // Hermite scale
    Rational lambda = Rational(1);     // Poisson-Charlier / actuarial intensity
    Rational p = Rational(1, 2);       // Meixner / Krawtchouk parameter, 0 < p < 1
    int a = 1;                         // pseudo-Narumi step count
    std::optional<umbral::MomentSeq> alpha; // Levy-Sheffer
    std::optional<umbral::MomentSeq> gamma; // Levy-Sheffer

    void validate() const;
};

/// Whether the family's polynomial uses t (process time) or n (walk length).
Symbol family_time_symbol(FamilyName name);

/// Degree-k member of the named family, as the harmonic-side expression
/// (normalization included on the polynomial side where the family has one).
XTPoly family(const FamilySpec& spec, int k);

/// Moments of the family's process at symbolic time: entry j is
/// E[process^j] as a polynomial in the family's time symbol.
std::vector<PolyN> family_process_moments(const FamilySpec& spec, int max_order);

/// Increment umbra of the family's process and the scale multiplying time.
umbral::MomentSeq family_base(const FamilySpec& spec, int order);
Rational family_time_scale(const FamilySpec& spec);

enum class AppellKind { Bernoulli, Euler };
/// Classical Appell expansions with the Bernoulli / Euler umbra.
PolyN appell_bernoulli_euler(AppellKind kind, int i);

/// Touchard polynomial Phi_i(x) = sum_k S(i,k) x^k.
PolyN exponential_polynomial(int i);

/// Partial Bell polynomial value B_{i,k}(args[1..i-k+1]).
Rational bell_partial(int i, int k, const std::vector<Rational>& args);
/// Complete Bell polynomial value Y_i(args[1..i]).
Rational bell_complete(int i, const std::vector<Rational>& args);

/// Generalized Bell polynomial C(i,k) (x + k.gamma)^{i-k} in x.
PolyN generalized_bell_poly(const umbral::MomentSeq& gamma, int i, int k);
/// Evaluation with x replaced by an uncorrelated umbra alpha.
Rational generalized_bell_at(const umbral::MomentSeq& gamma, int i, int k,
                             const umbral::MomentSeq& alpha);

/// Sheffer polynomial s_i(x) for the pair (alpha, gamma); needs g_1 != 0.
PolyN sheffer_polynomial(const umbral::MomentSeq& alpha, const umbral::MomentSeq& gamma, int i);

/// Lower-triangular coefficient matrix c_{i,k} of the Sheffer sequence for
/// (alpha, gamma), computed through the primitive-umbra representation.
std::vector<std::vector<Rational>> sheffer_coefficients(const umbral::MomentSeq& alpha,
                                                        const umbral::MomentSeq& gamma,
                                                        int order);

/// Exponential Riordan array rows for the pair (g, f) where g is the
/// generating function of g_part and 1 + f that of f_part; E[f_part] must be 1.
std::vector<std::vector<Rational>> riordan_array(const umbral::MomentSeq& g_part,
                                                 const umbral::MomentSeq& f_part, int order);

/// Connection constants b_{i,k} with r_i(x) = sum_k b_{i,k} s_k(x), where
/// {s_i} is Sheffer for (alpha, gamma) and {r_i} Sheffer for (xi, zeta).
std::vector<std::vector<Rational>> connection_constants(const umbral::MomentSeq& alpha,
                                                        const umbral::MomentSeq& gamma,
                                                        const umbral::MomentSeq& xi,
                                                        const umbral::MomentSeq& zeta,
                                                        int order);

/// Moments of the compositional inverse of the derivative umbra of gamma:
/// i-th moment is E[(-i.gamma)^{i-1}]. Requires first moment of gamma_D = 1.
umbral::MomentSeq lagrange_inverse(const umbral::MomentSeq& gamma, int order);

/// Kailath-Segall polynomial P_i in the variation symbols X1..Xi.
SparsePoly<Rational> kailath_segall(int i);

/// Volume polynomial V_i as a polynomial in x1..xi (prefactor 1/i! included).
SparsePoly<Rational> volume_polynomial_sym(int i, std::optional<int> cap = {});
/// Umbral evaluation of V_i: a monomial x_{v1}^{e1} x_{v2}^{e2} .. evaluates
/// to values[e1] * values[e2] * .. (values[j] is the j-th moment).
Rational volume_polynomial(int i, const std::vector<Rational>& values,
                           std::optional<int> cap = {});

} // namespace momentforge::polyfam
