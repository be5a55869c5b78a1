#include "doctest.h"
#include "fixtures.hpp"

#include <random>

using namespace apollo;
using fx::S;

TEST_CASE("orient fixtures") {
    CHECK(orient({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}) == Sign::Negative);
    CHECK(orient({1, 2, 3}, {1, 2, 3}, {0, 1, 0}, {0, 0, 1}) == Sign::Zero);
    CHECK(orient({0, 0, 1}, {0, 0, 0}, {2, 0, 0}, {1, 2, 0}) == Sign::Positive);
}

TEST_CASE("orient is alternating and translation invariant") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-20, 20);
    auto P = [&] { return Point3{Scalar(d(rng), 3), Scalar(d(rng), 7), Scalar(d(rng))}; };
    for (int n = 0; n < 300; ++n) {
        Point3 k = P(), l = P(), m = P(), q = P(), t = P();
        Sign s = orient(k, l, m, q);
        CHECK(orient(l, k, m, q) == -s);
        CHECK(orient(k, m, l, q) == -s);
        CHECK(orient(q, l, m, k) == -s);
        CHECK(orient(k + t, l + t, m + t, q + t) == s);
    }
}

TEST_CASE("minor_d fixtures") {
    std::vector<Site> col{S("a", "0", "0", "0", "1"), S("b", "1", "0", "0", "1"), S("c", "2", "0", "0", "1")};
    CHECK(minor_d(col, "xy") == 0);
    CHECK(minor_d(col, "xr") == 0);
    std::vector<Site> t{S("K", "0", "0", "0", "0"), S("L", "1", "0", "0", "0"), S("M", "0", "1", "0", "0"),
                        S("N", "0", "0", "1", "0")};
    CHECK(minor_d(t, "xyz") == -1);
    CHECK_THROWS_AS(minor_d(t, "xy"), Error);
}

TEST_CASE("minor_e fixtures") {
    Site pole = S("o", "0", "0", "0", "1");
    std::vector<Site> t{S("a", "1", "0", "0", "1"), S("b", "0", "1", "0", "1"), S("c", "0", "0", "1", "1")};
    CHECK(minor_e(pole, t, "xyz") == 1);
    CHECK(minor_e(pole, t, "xyr") == 0);
    CHECK(pbar(pole, S("s", "3", "0", "0", "1")) == 9);
}

TEST_CASE("is_hidden fixtures") {
    CHECK(is_hidden(S("a", "0", "0", "0", "1"), S("b", "0", "0", "0", "2")));
    CHECK(is_hidden(S("a", "1", "0", "0", "1"), S("b", "0", "0", "0", "2")));
    CHECK_FALSE(is_hidden(S("a", "3", "0", "0", "1"), S("b", "0", "0", "0", "2")));
}

TEST_CASE("compare_distance fixtures") {
    Site q = S("q", "0", "0", "0", "1");
    CHECK(compare_distance(q, S("a", "5", "0", "0", "1"), S("b", "5", "0", "0", "2")) == Sign::Positive);
    CHECK(compare_distance(q, S("a", "3", "4", "0", "2"), S("b", "-3", "-4", "0", "2")) == Sign::Zero);
    CHECK(compare_distance(q, S("a", "3", "0", "0", "1"), S("b", "0", "4", "0", "1")) == Sign::Negative);
    // staged squaring against floating evaluation
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-9, 9), r(0, 6);
    for (int n = 0; n < 2000; ++n) {
        auto mk = [&](const char* id) {
            return Site{id, {Scalar(d(rng)), Scalar(d(rng)), Scalar(d(rng))}, Scalar(r(rng))};
        };
        Site a = mk("a"), b = mk("b"), c = mk("c");
        auto dist = [&](const Site& s) {
            return std::sqrt(norm2(a.c - s.c).get_d()) - s.r.get_d();
        };
        double v = dist(b) - dist(c);
        if (std::abs(v) > 1e-9) CHECK(compare_distance(a, b, c) == (v > 0 ? Sign::Positive : Sign::Negative));
    }
}

TEST_CASE("max_weight_order fixtures") {
    std::vector<Site> s{S("a", "0", "0", "0", "3"), S("b", "0", "0", "0", "1"), S("c", "0", "0", "0", "2")};
    CHECK(max_weight_order(s) == std::vector<std::size_t>{1, 2, 0});
    std::vector<Site> t{S("a", "1", "0", "0", "1"), S("b", "0", "0", "0", "1")};
    CHECK(max_weight_order(t) == std::vector<std::size_t>{1, 0});
    std::vector<Site> one{S("a", "1", "0", "0", "1")};
    CHECK(max_weight_order(one) == std::vector<std::size_t>{0});
}

TEST_CASE("QuadExt sign") {
    CHECK(QuadExt(Scalar(1), Scalar(-1), Scalar(2)).sign() == Sign::Negative);
    CHECK(QuadExt(Scalar(2), Scalar(-1), Scalar(4)).sign() == Sign::Zero);
    CHECK(QuadExt(Scalar(3), Scalar(-1), Scalar(8)).sign() == Sign::Positive);
    CHECK(QuadExt(Scalar(0), Scalar(-1), Scalar(3)).sign() == Sign::Negative);
    CHECK(compare(QuadExt(Scalar(0), Scalar(1), Scalar(2)), QuadExt(Scalar(0), Scalar(1), Scalar(3))) ==
          Sign::Negative);
    CHECK(compare(QuadExt(Scalar(1), Scalar(1), Scalar(2)), QuadExt(Scalar(0), Scalar(1), Scalar(3))) ==
          Sign::Positive);
}

TEST_CASE("scalar parsing") {
    CHECK(parse_scalar("7/8") == Scalar(7, 8));
    CHECK(parse_scalar("-3.25") == Scalar(-13, 4));
    CHECK(parse_scalar("1e-3") == Scalar(1, 1000));
    CHECK(parse_scalar(" 2.5/0.5 ") == 5);
    CHECK_THROWS_AS(parse_scalar("abc"), Error);
    CHECK_THROWS_AS(parse_scalar("1/0"), Error);
    CHECK(format_scalar(Scalar(-13, 4)) == "-13/4");
}

TEST_CASE("inversion fixtures") {
    Site pole = S("o", "0", "0", "0", "1");
    auto a = invert(S("a", "3", "0", "0", "1"), pole);
    CHECK(a.u == Scalar(1, 3));
    CHECK(a.rho == 0);
    CHECK(a.pbar == 9);
    auto b = invert(S("b", "2", "0", "0", "2"), pole);
    CHECK(b.pbar == 3);
    CHECK(b.u == Scalar(2, 3));
    CHECK(b.rho == Scalar(1, 3));
    auto c = invert(S("c", "0", "3", "0", "1/2"), pole);
    CHECK(c.rho == Scalar(-2, 35));
    CHECK_THROWS_AS(invert(S("d", "0", "0", "0", "3"), pole), Error);
}
