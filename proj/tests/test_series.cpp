#include "doctest.h"

#include "helpers.hpp"
#include "modasc/error.hpp"
#include "modasc/series.hpp"

using namespace modasc;
using testing::ints;

TEST_SUITE("series") {

TEST_CASE("construction") {
    const IntSeries a(ints({1, 2, 3}), 4);
    CHECK(a.order() == 4);
    CHECK(a.coefficients() == ints({1, 2, 3, 0, 0}));
    CHECK(IntSeries::geometric(2, 4).coefficients() == ints({1, 2, 4, 8, 16}));
    CHECK(IntSeries::monomial(3, 2, 3).coefficients() == ints({0, 0, 3, 0}));
    CHECK(IntSeries::constant(5, 2).coefficients() == ints({5, 0, 0}));
    CHECK(IntSeries::monomial(3, 5, 3) == IntSeries(3));
    CHECK(IntSeries(ints({1, 2, 3}), 1).coefficients() == ints({1, 2}));
}

TEST_CASE("ring operations truncate to the smaller order") {
    const IntSeries a(ints({1, 1}), 5);
    const IntSeries b = IntSeries::geometric(1, 3);
    CHECK((a + b).order() == 3);
    CHECK((a * b).coefficients() == ints({1, 2, 2, 2}));
    CHECK((b - b) == IntSeries(3));
    CHECK((a * Integer(3)).coefficients() == ints({3, 3, 0, 0, 0, 0}));
}

TEST_CASE("inverse") {
    const IntSeries g = IntSeries::geometric(3, 6);
    CHECK(g.inverse().coefficients() == ints({1, -3, 0, 0, 0, 0, 0}));
    const IntSeries m(ints({-1, 1}), 4);
    CHECK((m * m.inverse()) == IntSeries::constant(1, 4));
    CHECK_THROWS_AS((void)IntSeries(ints({2, 1}), 3).inverse(), InvalidInput);
}

TEST_CASE("composition") {
    // 1/(1-t) composed with t/(1-t) is (1-t)/(1-2t)
    const std::size_t N = 8;
    const IntSeries inner = IntSeries::geometric(1, N).shift_up(1).truncate(N);
    const IntSeries got = IntSeries::geometric(1, N).compose(inner);
    std::vector<Integer> want{1};
    for (std::size_t n = 1; n <= N; ++n) want.push_back(power(2, n - 1));
    CHECK(got.coefficients() == want);
    CHECK_THROWS_AS((void)got.compose(IntSeries::geometric(1, N)), InvalidInput);
}

TEST_CASE("shifts and truncation") {
    const IntSeries a(ints({0, 0, 1, 2}), 3);
    CHECK(a.shift_down(2).coefficients() == ints({1, 2}));
    CHECK_THROWS_AS((void)a.shift_down(3), InvalidInput);
    CHECK(IntSeries(ints({1, 2}), 2).shift_up(1).coefficients() == ints({0, 1, 2}));
    CHECK(a.truncate(2).coefficients() == ints({0, 0, 1}));
    CHECK_THROWS_AS((void)a.truncate(5), InvalidInput);
    CHECK(a.str() == "0, 0, 1, 2");
}

TEST_CASE("exact arithmetic past 64 bits") {
    const IntSeries g = IntSeries::geometric(10, 30);
    CHECK(g[30] == power(10, 30));
    CHECK(to_string(g[25]) == "10000000000000000000000000");
}

}  // TEST_SUITE
