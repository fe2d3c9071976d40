#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "momentforge/rational.hpp"

namespace momentforge::combinat {

/// Integer partition lambda |- i, parts weakly decreasing.
struct IntPartition {
    std::vector<int> parts;

    int weight() const;
    int length() const { return static_cast<int>(parts.size()); }
    /// multiplicity r_j of each distinct part j
    std::map<int, int> multiplicities() const;
    /// d_lambda = i! / (prod_j (j!)^{r_j} r_j!), the number of set partitions
    /// of [i] whose block sizes are the parts.
    Int d() const;

    friend bool operator==(const IntPartition& a, const IntPartition& b) {
        return a.parts == b.parts;
    }
    friend bool operator<(const IntPartition& a, const IntPartition& b) {
        return a.parts < b.parts;
    }
};

/// All partitions of i in reverse-lexicographic order; the empty partition for i = 0.
std::vector<IntPartition> integer_partitions(int i);

/// Partition of {0, .., n-1}; blocks sorted by least element, elements ascending.
struct SetPartition {
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
    int ground_size() const;
    /// sorted block sizes, ascending
    std::vector<int> type() const;
};

std::vector<SetPartition> set_partitions(int n, std::optional<int> cap = {});

/// Refinement order: every block of a is contained in a block of b.
bool refines(const SetPartition& a, const SetPartition& b);

enum class LatticeKind { All, Interval, NonCrossing };

bool is_interval(const SetPartition& p);
bool is_noncrossing(const SetPartition& p);

std::vector<SetPartition> lattice_partitions(LatticeKind kind, int n,
                                             std::optional<int> cap = {});

/// Subdivision of a multiset, the multiset analog of a set partition.
/// Blocks are multiplicity vectors over the element ids, stored as
/// (distinct block, repetition count) with d_S the number of set partitions
/// of the underlying set collapsing to it.
struct MultisetSubdivision {
    std::vector<std::pair<std::vector<int>, int>> blocks;
    Int d_S;

    int block_count() const; // counted with repetition
};

/// All subdivisions of the multiset with the given multiplicity vector.
std::vector<MultisetSubdivision> multiset_subdivisions(const std::vector<int>& multiplicities,
                                                       std::optional<int> cap = {});

/// Partition of a multi-index: nonzero columns in ascending lexicographic
/// order, stored as (distinct column, repetition count).
struct MultiIndexPartition {
    std::vector<std::pair<std::vector<int>, int>> columns;

    int length() const; // l(lambda), counted with repetition
    /// m(lambda)! = prod over distinct columns of r_j!
    Int multiplicity_factorial() const;
    /// lambda! = prod over columns (with repetition) of prod_r entry!
    Int entry_factorial() const;
};

std::vector<MultiIndexPartition> multi_index_partitions(const std::vector<int>& index,
                                                        std::optional<int> cap = {});

enum class NamedNumber { Bell, Bernoulli, Euler, Catalan, Stirling1, Stirling2, MobiusPi };

/// Exact value of a named sequence. Stirling kinds take (i, k); the others
/// ignore k. Stirling1 is signed.
Rational named_number(NamedNumber kind, int i, int k = 0);

Int stirling2(int n, int k);
Int stirling1_signed(int n, int k); // s(n, k)
Rational bernoulli_number(int n);
Rational euler_number(int n);
Int bell_number(int n);
Int catalan_number(int n);

/// All parking functions of length n, lexicographically ordered.
std::vector<std::vector<int>> parking_functions(int n, std::optional<int> cap = {});

} // namespace momentforge::combinat
