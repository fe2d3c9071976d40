#include <doctest.h>

#include <algorithm>
#include <set>

#include "momentforge/combinat.hpp"
#include "momentforge/errors.hpp"

using namespace momentforge;
using namespace momentforge::combinat;

TEST_CASE("integer partitions: counts, d and nu") {
    CHECK(integer_partitions(0).size() == 1);
    CHECK(integer_partitions(0)[0].parts.empty());

    auto p1 = integer_partitions(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].d() == 1);
    CHECK(p1[0].length() == 1);

    CHECK(integer_partitions(4).size() == 5);

    // lambda = (3,1,1) |- 5: count set partitions of [5] with block sizes 1,1,3
    IntPartition lam{{3, 1, 1}};
    int direct = 0;
    for (const auto& sp : set_partitions(5)) {
        auto t = sp.type();
        if (t == std::vector<int>{1, 1, 3}) ++direct;
    }
    CHECK(lam.d() == direct);
    CHECK(direct == 10);
}

TEST_CASE("integer partitions come in reverse-lexicographic order without duplicates") {
    for (int i : {3, 6, 9}) {
        auto ps = integer_partitions(i);
        std::set<std::vector<int>> seen;
        for (size_t j = 0; j < ps.size(); ++j) {
            CHECK(ps[j].weight() == i);
            CHECK(std::is_sorted(ps[j].parts.rbegin(), ps[j].parts.rend()));
            seen.insert(ps[j].parts);
            if (j > 0) CHECK(ps[j - 1].parts > ps[j].parts);
        }
        CHECK(seen.size() == ps.size());
    }
}

TEST_CASE("set partitions: Bell counts and structure") {
    CHECK(set_partitions(1).size() == 1);
    CHECK(set_partitions(3).size() == 5);
    CHECK(set_partitions(4).size() == 15);
    for (const auto& sp : set_partitions(4)) {
        std::set<int> all;
        for (const auto& b : sp.blocks)
            for (int e : b) all.insert(e);
        CHECK(all.size() == 4);
    }
    CHECK_THROWS_AS(set_partitions(50), cap_error);
    CHECK_THROWS_AS(set_partitions(0), input_error);
}

TEST_CASE("sum of d over partitions equals Bell, refined by Stirling2") {
    for (int i = 1; i <= 10; ++i) {
        Int total(0);
        std::map<int, Int> by_length;
        for (const auto& lam : integer_partitions(i)) {
            total += lam.d();
            by_length[lam.length()] += lam.d();
        }
        CHECK(total == bell_number(i));
        for (const auto& [k, v] : by_length) CHECK(v == stirling2(i, k));
    }
}

TEST_CASE("multiset subdivisions: paper multiset {m1, m1, m2}") {
    auto subs = multiset_subdivisions({2, 1});
    CHECK(subs.size() == 4);
    // the subdivision {{m1},{m1,m2}} has d_S = 2
    bool found = false;
    for (const auto& s : subs) {
        if (s.blocks.size() == 2) {
            std::vector<std::vector<int>> blocks;
            for (const auto& [b, g] : s.blocks)
                for (int c = 0; c < g; ++c) blocks.push_back(b);
            std::sort(blocks.begin(), blocks.end());
            if (blocks == std::vector<std::vector<int>>{{1, 0}, {1, 1}}) {
                found = true;
                CHECK(s.d_S == 2);
            }
        }
    }
    CHECK(found);

    auto single = multiset_subdivisions({1});
    REQUIRE(single.size() == 1);
    CHECK(single[0].d_S == 1);
}

TEST_CASE("subdivision d_S sums to Bell of the multiset size") {
    for (std::vector<int> m : {std::vector<int>{3}, {2, 2}, {1, 1, 1}, {4, 2}, {2, 1, 1}}) {
        Int total(0);
        int size = 0;
        for (int f : m) size += f;
        for (const auto& s : multiset_subdivisions(m)) total += s.d_S;
        CHECK(total == bell_number(size));
    }
}

TEST_CASE("d_S equals brute-force count of collapsing set partitions") {
    // label the multiset elements, enumerate set partitions, collapse, compare
    for (std::vector<int> mult : {std::vector<int>{2, 1}, {3, 1}, {2, 2}, {1, 1, 1}, {4}}) {
        int size = 0;
        std::vector<int> label; // element id per position
        for (size_t e = 0; e < mult.size(); ++e)
            for (int c = 0; c < mult[e]; ++c) {
                label.push_back(static_cast<int>(e));
                ++size;
            }
        // canonical form of a subdivision: sorted list of blocks-with-counts
        auto canon = [&](std::vector<std::vector<int>> blocks) {
            std::sort(blocks.begin(), blocks.end());
            return blocks;
        };
        std::map<std::vector<std::vector<int>>, int> counts;
        for (const auto& sp : set_partitions(size)) {
            std::vector<std::vector<int>> blocks;
            for (const auto& b : sp.blocks) {
                std::vector<int> h(mult.size(), 0);
                for (int e : b) ++h[static_cast<size_t>(label[static_cast<size_t>(e)])];
                blocks.push_back(std::move(h));
            }
            ++counts[canon(std::move(blocks))];
        }
        for (const auto& s : multiset_subdivisions(mult)) {
            std::vector<std::vector<int>> blocks;
            for (const auto& [b, g] : s.blocks)
                for (int c = 0; c < g; ++c) blocks.push_back(b);
            auto it = counts.find(canon(std::move(blocks)));
            REQUIRE(it != counts.end());
            CHECK(Int(it->second) == s.d_S);
        }
        // and the subdivision list is complete
        Int listed(0);
        for (const auto& s : multiset_subdivisions(mult)) listed += 1;
        CHECK(listed == Int(static_cast<long>(counts.size())));
    }
}

TEST_CASE("multi-index partitions match the paper's (2,1) example") {
    auto parts = multi_index_partitions({2, 1});
    CHECK(parts.size() == 4);
    CHECK(multi_index_partitions({1}).size() == 1);
    CHECK(multi_index_partitions({2, 2}).size() == 9);
    for (const auto& p : parts) {
        // row sums reproduce the index; columns ascending
        std::vector<int> sums(2, 0);
        std::vector<std::vector<int>> flat;
        for (const auto& [col, r] : p.columns)
            for (int c = 0; c < r; ++c) {
                for (size_t d = 0; d < col.size(); ++d) sums[d] += col[d];
                flat.push_back(col);
            }
        CHECK(sums == std::vector<int>{2, 1});
        CHECK(std::is_sorted(flat.begin(), flat.end()));
    }
}

TEST_CASE("multi-index partitions are counted by multiset subdivisions") {
    for (std::vector<int> idx : {std::vector<int>{2, 1}, {3, 2}, {1, 1, 1}, {4, 1}, {2, 2, 2}}) {
        CHECK(multi_index_partitions(idx).size() == multiset_subdivisions(idx).size());
    }
}

TEST_CASE("lattice partitions: interval and noncrossing counts") {
    CHECK(lattice_partitions(LatticeKind::Interval, 3).size() == 4);
    CHECK(lattice_partitions(LatticeKind::NonCrossing, 4).size() == 14);
    CHECK(lattice_partitions(LatticeKind::Interval, 1).size() == 1);
    CHECK(lattice_partitions(LatticeKind::NonCrossing, 1).size() == 1);
    for (int n = 2; n <= 10; ++n) {
        CHECK(Int(static_cast<long>(lattice_partitions(LatticeKind::NonCrossing, n).size())) ==
              catalan_number(n));
        CHECK(lattice_partitions(LatticeKind::Interval, n).size() ==
              static_cast<size_t>(1) << (n - 1));
    }
}

TEST_CASE("named numbers") {
    CHECK(named_number(NamedNumber::Bernoulli, 2) == Rational(1, 6));
    CHECK(named_number(NamedNumber::Bernoulli, 1) == Rational(-1, 2));
    CHECK(named_number(NamedNumber::Bernoulli, 3) == Rational(0));
    CHECK(named_number(NamedNumber::Bell, 3) == Rational(5));
    CHECK(named_number(NamedNumber::Stirling2, 4, 2) == Rational(7));
    CHECK(named_number(NamedNumber::Stirling1, 3, 1) == Rational(2));
    CHECK(named_number(NamedNumber::Stirling1, 3, 2) == Rational(-3));
    CHECK(named_number(NamedNumber::Catalan, 4) == Rational(14));
    CHECK(named_number(NamedNumber::Euler, 2) == Rational(-1));
    CHECK(named_number(NamedNumber::Euler, 4) == Rational(5));
    CHECK(named_number(NamedNumber::Euler, 1) == Rational(0));
    CHECK(named_number(NamedNumber::MobiusPi, 4) == Rational(-6));

    // Bell via set partition counts
    for (int n = 1; n <= 6; ++n)
        CHECK(bell_number(n) == Int(static_cast<long>(set_partitions(n).size())));

    // Bernoulli recurrence as stated
    for (int i = 1; i <= 10; ++i) {
        Rational s(0);
        for (int k = 0; k <= i; ++k)
            s += Rational(int_binomial(i + 1, k)) * bernoulli_number(k);
        CHECK(s.is_zero());
    }
}

TEST_CASE("parking functions") {
    auto p1 = parking_functions(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0] == std::vector<int>{1});

    auto p2 = parking_functions(2);
    CHECK(p2 == std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 1}});

    CHECK(parking_functions(3).size() == 16);
    CHECK(parking_functions(4).size() == 125);
    CHECK_THROWS_AS(parking_functions(8), cap_error);
}
