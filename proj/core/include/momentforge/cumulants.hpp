#pragma once

#include <vector>

#include "momentforge/rational.hpp"
#include "momentforge/umbral.hpp"

namespace momentforge::cumulants {

/// Cumulant family selector. abel(1) acting on raw moments is the classical
/// family; abel(2) on i!-scaled moments is Boolean (before normalization);
/// the order-indexed diagonal abel(i) on i!-scaled moments is free.
struct CumulantKind {
    enum class Tag { Classical, Boolean, Free, Abel };
    Tag tag = Tag::Classical;
    int m = 1; // Abel parameter

    static CumulantKind classical() { return {Tag::Classical, 1}; }
    static CumulantKind boolean() { return {Tag::Boolean, 2}; }
    static CumulantKind free() { return {Tag::Free, 0}; }
    static CumulantKind abel(int m);

    friend bool operator==(const CumulantKind& a, const CumulantKind& b) {
        return a.tag == b.tag && a.m == b.m;
    }
};

/// Cumulants c_1..c_N of one family.
struct CumulantSeq {
    CumulantKind kind;
    std::vector<Rational> values; // values[j] = c_{j+1}

    int order() const { return static_cast<int>(values.size()); }
    const Rational& c(int j) const { return values[static_cast<size_t>(j - 1)]; }
};

/// sum over partitions of i of E[(rho)_{nu-1}] d_lambda g_lambda, where
/// rho_factorials[j] supplies E[(rho)_j] and rho_factorials[0] = 1.
Rational abel_expansion(const std::vector<Rational>& g,
                        const std::vector<Rational>& rho_factorials, int i);

CumulantSeq moments_to_cumulants(const umbral::MomentSeq& a, CumulantKind kind);
umbral::MomentSeq cumulants_to_moments(const CumulantSeq& c);

/// Column m holds the Abel-type cumulants c_{i,m} of the input sequence;
/// result[i-1][m-1] = c_{i,m} for 1 <= i <= order, 1 <= m <= max_m.
std::vector<std::vector<Rational>> abel_type_matrix(const umbral::MomentSeq& a,
                                                    int max_m, int order);

} // namespace momentforge::cumulants
