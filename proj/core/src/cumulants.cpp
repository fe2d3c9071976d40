#include "momentforge/cumulants.hpp"

#include "momentforge/combinat.hpp"
#include "momentforge/errors.hpp"

namespace momentforge::cumulants {

using combinat::integer_partitions;

CumulantKind CumulantKind::abel(int m) {
    if (m < 1) throw input_error("abel cumulant parameter must be positive");
    return {Tag::Abel, m};
}

Rational abel_expansion(const std::vector<Rational>& g,
                        const std::vector<Rational>& rho_factorials, int i) {
    if (i < 1 || i >= static_cast<int>(g.size()))
        throw input_error("abel_expansion: order out of range");
    if (static_cast<int>(rho_factorials.size()) < i || !rho_factorials[0].is_one())
        throw input_error("abel_expansion: need E[(rho)_0..(rho)_{i-1}] with E[(rho)_0] = 1");
    Rational s(0);
    for (const auto& lambda : integer_partitions(i)) {
        Rational prod(1);
        for (int part : lambda.parts) prod *= g[static_cast<size_t>(part)];
        s += rho_factorials[static_cast<size_t>(lambda.length() - 1)] * Rational(lambda.d()) * prod;
    }
    return s;
}

// E[(-m.u)_j] = (-m)_j as a vector of length len.
static std::vector<Rational> negative_m_factorials(int m, int len) {
    std::vector<Rational> f(static_cast<size_t>(len));
    for (int j = 0; j < len; ++j) f[static_cast<size_t>(j)] = falling_factorial(Rational(-m), j);
    return f;
}

static std::vector<Rational> positive_m_factorials(int m, int len) {
    std::vector<Rational> f(static_cast<size_t>(len));
    for (int j = 0; j < len; ++j) f[static_cast<size_t>(j)] = falling_factorial(Rational(m), j);
    return f;
}

static std::vector<Rational> bar_scaled(const std::vector<Rational>& a) {
    std::vector<Rational> b(a.size());
    b[0] = Rational(1);
    for (size_t i = 1; i < a.size(); ++i)
        b[i] = Rational(int_factorial(static_cast<long>(i))) * a[i];
    return b;
}

CumulantSeq moments_to_cumulants(const umbral::MomentSeq& a, CumulantKind kind) {
    const int n = a.order();
    CumulantSeq out{kind, {}};
    if (n == 0) return out;
    out.values.reserve(static_cast<size_t>(n));

    switch (kind.tag) {
        case CumulantKind::Tag::Classical: {
            const auto rho = negative_m_factorials(1, n);
            for (int i = 1; i <= n; ++i)
                out.values.push_back(abel_expansion(a.moments(), rho, i));
            break;
        }
        case CumulantKind::Tag::Boolean: {
            const auto bar = bar_scaled(a.moments());
            const auto rho = negative_m_factorials(2, n);
            for (int i = 1; i <= n; ++i)
                out.values.push_back(abel_expansion(bar, rho, i) /
                                     Rational(int_factorial(i)));
            break;
        }
        case CumulantKind::Tag::Free: {
            const auto bar = bar_scaled(a.moments());
            for (int i = 1; i <= n; ++i) {
                const auto rho = negative_m_factorials(i, i);
                out.values.push_back(abel_expansion(bar, rho, i) /
                                     Rational(int_factorial(i)));
            }
            break;
        }
        case CumulantKind::Tag::Abel: {
            const auto rho = negative_m_factorials(kind.m, n);
            for (int i = 1; i <= n; ++i)
                out.values.push_back(abel_expansion(a.moments(), rho, i));
            break;
        }
    }
    return out;
}

umbral::MomentSeq cumulants_to_moments(const CumulantSeq& c) {
    const int n = c.order();
    std::vector<Rational> m(static_cast<size_t>(n) + 1);
    m[0] = Rational(1);
    if (n == 0) return umbral::MomentSeq(std::move(m));

    switch (c.kind.tag) {
        case CumulantKind::Tag::Classical: {
            // rho = beta, all factorial moments 1
            std::vector<Rational> g(static_cast<size_t>(n) + 1);
            g[0] = Rational(1);
            for (int j = 1; j <= n; ++j) g[static_cast<size_t>(j)] = c.c(j);
            std::vector<Rational> rho(static_cast<size_t>(n), Rational(1));
            for (int i = 1; i <= n; ++i)
                m[static_cast<size_t>(i)] = abel_expansion(g, rho, i);
            break;
        }
        case CumulantKind::Tag::Boolean: {
            // on eta-bar with E[(rho)_j] = (j+1)! and division by i! to report a_i
            std::vector<Rational> g(static_cast<size_t>(n) + 1);
            g[0] = Rational(1);
            for (int j = 1; j <= n; ++j)
                g[static_cast<size_t>(j)] = Rational(int_factorial(j)) * c.c(j);
            std::vector<Rational> rho(static_cast<size_t>(n));
            for (int j = 0; j < n; ++j) rho[static_cast<size_t>(j)] = Rational(int_factorial(j + 1));
            for (int i = 1; i <= n; ++i)
                m[static_cast<size_t>(i)] = abel_expansion(g, rho, i) / Rational(int_factorial(i));
            break;
        }
        case CumulantKind::Tag::Free: {
            std::vector<Rational> g(static_cast<size_t>(n) + 1);
            g[0] = Rational(1);
            for (int j = 1; j <= n; ++j)
                g[static_cast<size_t>(j)] = Rational(int_factorial(j)) * c.c(j);
            for (int i = 1; i <= n; ++i) {
                const auto rho = positive_m_factorials(i, i);
                m[static_cast<size_t>(i)] = abel_expansion(g, rho, i) / Rational(int_factorial(i));
            }
            break;
        }
        case CumulantKind::Tag::Abel: {
            std::vector<Rational> g(static_cast<size_t>(n) + 1);
            g[0] = Rational(1);
            for (int j = 1; j <= n; ++j) g[static_cast<size_t>(j)] = c.c(j);
            const auto rho = positive_m_factorials(c.kind.m, n);
            for (int i = 1; i <= n; ++i)
                m[static_cast<size_t>(i)] = abel_expansion(g, rho, i);
            break;
        }
    }
    return umbral::MomentSeq(std::move(m));
}

std::vector<std::vector<Rational>> abel_type_matrix(const umbral::MomentSeq& a,
                                                    int max_m, int order) {
    if (order > a.order()) throw input_error("abel_type_matrix: order exceeded");
    std::vector<std::vector<Rational>> mat(static_cast<size_t>(order));
    for (int m = 1; m <= max_m; ++m) {
        const auto rho = negative_m_factorials(m, order == 0 ? 1 : order);
        for (int i = 1; i <= order; ++i)
            mat[static_cast<size_t>(i - 1)].push_back(abel_expansion(a.moments(), rho, i));
    }
    return mat;
}

} // namespace momentforge::cumulants
