#include <doctest.h>

#include <random>

#include "momentforge/combinat.hpp"
#include "momentforge/poly.hpp"
#include "momentforge/rational.hpp"
#include "momentforge/series.hpp"

using namespace momentforge;

namespace {

std::vector<Rational> random_rationals(std::mt19937& rng, size_t count, bool unit_leading) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::vector<Rational> out(count);
    if (unit_leading) out[0] = Rational(1);
    for (size_t i = unit_leading ? 1 : 0; i < count; ++i) out[i] = Rational(num(rng), den(rng));
    return out;
}

// brute-force count of set partitions of sizes 0..5 via combinat, used to
// freeze the Bell-number expectation independently of the series code
std::vector<Rational> bell_by_enumeration(int order) {
    std::vector<Rational> b(static_cast<size_t>(order) + 1);
    b[0] = Rational(1);
    for (int n = 1; n <= order; ++n)
        b[static_cast<size_t>(n)] =
            Rational(static_cast<long>(combinat::set_partitions(n).size()));
    return b;
}

} // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
    Rational r(6, -8);
    CHECK(r == Rational(-3, 4));
    CHECK(r.str() == "-3/4");
    CHECK(Rational::parse("-3/4") == r);
    CHECK(Rational::parse("5").str() == "5");
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), input_error);
    CHECK_THROWS_AS(Rational::parse("x"), input_error);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto v = random_rationals(rng, 2, false);
        CHECK((v[0] + v[1]) - v[1] == v[0]);
        if (!v[1].is_zero()) CHECK((v[0] / v[1]) * v[1] == v[0]);
    }
}

TEST_CASE("polynomial division and gcd") {
    // (n^2 - 1) / (n - 1) = n + 1
    PolyN p = PolyN::from_coeffs({Rational(-1), Rational(0), Rational(1)});
    PolyN q = PolyN::from_coeffs({Rational(-1), Rational(1)});
    auto [quot, rem] = PolyN::divmod(p, q);
    CHECK(rem.is_zero());
    CHECK(quot == PolyN::from_coeffs({Rational(1), Rational(1)}));
    CHECK(PolyN::gcd(p, q) == q.monic());
    CHECK(PolyN::falling_factorial(2).str() == "n^2-n");
}

TEST_CASE("rational functions reduce and evaluate") {
    RationalFunctionInN f(PolyN::from_coeffs({Rational(0), Rational(2)}),
                          PolyN::from_coeffs({Rational(0), Rational(0), Rational(2)}));
    CHECK(f == RationalFunctionInN(PolyN::one(), PolyN::variable()));
    CHECK(f.str() == "1/n");
    CHECK(f.eval(Rational(4)) == Rational(1, 4));
    RationalFunctionInN g = RationalFunctionInN(Rational(1)) / RationalFunctionInN::from_poly(
                                 PolyN::falling_factorial(2));
    CHECK(g.str() == "1/(n^2-n)");
    CHECK((f - f).is_zero());
    RationalFunctionInN sum = f + g; // 1/n + 1/(n(n-1)) = 1/(n-1)
    CHECK(sum == RationalFunctionInN(PolyN::one(),
                                     PolyN::from_coeffs({Rational(-1), Rational(1)})));
}

TEST_CASE("series_compose: exp o exp gives Bell numbers") {
    const int order = 5;
    std::vector<Rational> ones(order + 1, Rational(1));
    TruncatedSeries exp_series{ones};
    TruncatedSeries composed = series_compose(exp_series, exp_series);
    const auto expected = bell_by_enumeration(order);
    for (int i = 0; i <= order; ++i) CHECK(composed[i] == expected[static_cast<size_t>(i)]);
}

TEST_CASE("series_compose: singleton inner is the identity") {
    std::mt19937 rng(11);
    auto coeffs = random_rationals(rng, 9, true);
    TruncatedSeries f{coeffs};
    std::vector<Rational> single(9, Rational(0));
    single[0] = Rational(1);
    single[1] = Rational(1);
    CHECK(series_compose(f, TruncatedSeries{single}) == f);
}

TEST_CASE("series_compose: order-2 Faa di Bruno") {
    TruncatedSeries outer{{Rational(1), Rational::parse("2/3"), Rational(5)}};
    TruncatedSeries inner{{Rational(1), Rational(7), Rational::parse("-1/2")}};
    TruncatedSeries c = series_compose(outer, inner);
    CHECK(c[1] == Rational::parse("2/3") * Rational(7));
    CHECK(c[2] == Rational::parse("2/3") * Rational::parse("-1/2") + Rational(5) * Rational(49));
}

TEST_CASE("series_compose rejects bad input") {
    TruncatedSeries f{{Rational(1), Rational(1)}};
    TruncatedSeries g{{Rational(2), Rational(1)}};
    TruncatedSeries h{{Rational(1), Rational(1), Rational(1)}};
    CHECK_THROWS_AS(series_compose(f, g), input_error);
    CHECK_THROWS_AS(series_compose(f, h), input_error);
}

TEST_CASE("series_reciprocal") {
    const int order = 6;
    std::vector<Rational> ones(order + 1, Rational(1));
    TruncatedSeries rec = series_reciprocal(TruncatedSeries{ones});
    for (int i = 0; i <= order; ++i)
        CHECK(rec[i] == (i % 2 == 0 ? Rational(1) : Rational(-1))); // exp(-z)

    std::vector<Rational> unity(order + 1, Rational(0));
    unity[0] = Rational(1);
    CHECK(series_reciprocal(TruncatedSeries{unity}) == TruncatedSeries{unity});

    std::vector<Rational> onepz = unity;
    onepz[1] = Rational(1);
    TruncatedSeries r = series_reciprocal(TruncatedSeries{onepz});
    for (int i = 0; i <= order; ++i) {
        Rational expect(int_factorial(i));
        if (i % 2 != 0) expect = -expect;
        CHECK(r[i] == expect); // geometric series 1/(1+z)
    }

    std::vector<Rational> bad(order + 1, Rational(1));
    bad[0] = Rational(2);
    CHECK_THROWS_AS(series_reciprocal(TruncatedSeries{bad}), input_error);
}

TEST_CASE("series_reciprocal is an involution") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        auto coeffs = random_rationals(rng, 9, true);
        TruncatedSeries f{coeffs};
        CHECK(series_reciprocal(series_reciprocal(f)) == f);
    }
}

TEST_CASE("series_pow matches repeated multiplication") {
    std::mt19937 rng(5);
    auto coeffs = random_rationals(rng, 7, true);
    TruncatedSeries f{coeffs};
    TruncatedSeries f3 = series_mul(series_mul(f, f), f);
    CHECK(series_pow(f, Rational(3)) == f3);
    CHECK(series_mul(series_pow(f, Rational(-2)), f3) == f);
}
