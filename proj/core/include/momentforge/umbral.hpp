#pragma once

#include <vector>

#include "momentforge/poly.hpp"
#include "momentforge/rational.hpp"
#include "momentforge/series.hpp"

namespace momentforge::umbral {

/// Truncated moment sequence a_0 = 1, a_1..a_N of an umbra.
class MomentSeq {
public:
    explicit MomentSeq(std::vector<Rational> moments);

    int order() const { return static_cast<int>(moments_.size()) - 1; }
    const Rational& operator[](int i) const { return moments_[static_cast<size_t>(i)]; }
    const std::vector<Rational>& moments() const { return moments_; }

    TruncatedSeries series() const { return TruncatedSeries(moments_); }
    static MomentSeq from_series(const TruncatedSeries& s) { return MomentSeq(s.coeffs()); }

    friend bool operator==(const MomentSeq& a, const MomentSeq& b) {
        return a.moments_ == b.moments_;
    }
    friend bool operator!=(const MomentSeq& a, const MomentSeq& b) { return !(a == b); }

private:
    std::vector<Rational> moments_;
};

enum class NamedUmbra {
    Augmentation, // 0
    Unity,        // 1
    Singleton,    // delta_{i,1}
    Bell,         // Bell numbers
    Bernoulli,    // Bernoulli numbers
    Euler,        // Euler numbers
    BooleanUnity, // i!
    Catalan,      // Catalan numbers
    Eta,          // delta_{i,2}
    Uniform,      // 1/(i+1)
};

MomentSeq named(NamedUmbra which, int order);

/// q_i(t) = sum over partitions of i of (t)_nu d_lambda a_lambda.
Rational dot_scalar(const MomentSeq& alpha, const Rational& t, int i);
/// Same value as a polynomial in the symbolic scalar.
PolyN dot_scalar_poly(const MomentSeq& alpha, int i);
/// Moments of -t.alpha, i.e. dot_scalar at -t.
Rational inverse_dot(const MomentSeq& alpha, const Rational& t, int i);

/// a_(i) = sum_k s(i,k) a_k for i = 0..N.
std::vector<Rational> factorial_moments(const MomentSeq& alpha);
/// Inverse transform a_i = sum_k S(i,k) a_(k); input indexed 0..N with value 1 at 0.
MomentSeq raw_from_factorial(const std::vector<Rational>& fm);

/// gamma.alpha with E[(gamma.alpha)^i] = sum (gamma)_(nu) d_lambda a_lambda.
MomentSeq dot_umbra(const MomentSeq& gamma, const MomentSeq& alpha, int order);

/// gamma.beta.alpha with E = sum d_lambda g_nu a_lambda.
MomentSeq composition_umbra(const MomentSeq& gamma, const MomentSeq& alpha, int order);

/// alpha^<-1> defined by f(alpha^<-1>, f(alpha,z) - 1) = 1 + z; needs a_1 != 0.
MomentSeq compositional_inverse(const MomentSeq& alpha, int order);

/// Pointwise sum of moments at indices >= 1.
MomentSeq disjoint_sum(const MomentSeq& a, const MomentSeq& g);

/// Homogeneous scaling a_i -> c^i a_i.
MomentSeq scale(const MomentSeq& a, const Rational& c);

/// Binomial convolution: moments of alpha + gamma for uncorrelated umbrae.
MomentSeq convolve(const MomentSeq& a, const MomentSeq& g);

/// Moments of t.beta.(c0 chi +. s eta +. nu); nu must have zero first moment.
MomentSeq levy_moments(const Rational& c0, const Rational& s, const MomentSeq& nu,
                       const Rational& t, int order);
/// Same with the time parameter symbolic; entry i is a polynomial in t.
std::vector<PolyN> levy_moments_poly(const Rational& c0, const Rational& s,
                                     const MomentSeq& nu, int order);

} // namespace momentforge::umbral
