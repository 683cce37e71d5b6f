#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "veronese/weights.hpp"

using namespace veronese;

namespace {

DominantWeight random_dominant(std::mt19937_64& rng, Int n, Int lo, Int hi) {
    std::uniform_int_distribution<Int> dist(lo, hi);
    IntVec parts(static_cast<std::size_t>(n));
    for (auto& p : parts) p = dist(rng);
    std::sort(parts.rbegin(), parts.rend());
    return DominantWeight(parts);
}

} // namespace

TEST_CASE("dominant weight construction validates") {
    CHECK_THROWS_AS(DominantWeight(IntVec{1, 2}), DomainError);
    CHECK_THROWS_AS(DominantWeight(IntVec{}), DomainError);
    CHECK_NOTHROW(DominantWeight(IntVec{3, 3, -1}));
    CHECK(DominantWeight(IntVec{4, 2}).part(1) == 4);
}

TEST_CASE("size") {
    CHECK(DominantWeight(IntVec{0, 0, 0}).size() == 0);
    CHECK(DominantWeight(IntVec{4, 2}).size() == 6);
    // (u_d^n) for n=2, d=2 is (3,3); u_d*n = N*d with N = dim Sym^2 C^2 = 3
    CHECK(DominantWeight(IntVec{3, 3}).size() == 6);
    CHECK(u_d(2, 2) * 2 == 3 * 2);
}

TEST_CASE("u_d and n_d") {
    CHECK(u_d(2, 2) == 3);
    CHECK(u_d(3, 2) == 4);
    CHECK(u_d(2, 3) == 6);
    CHECK(n_d(2, 2) == 1);
    CHECK(n_d(3, 2) == 3);
    CHECK(n_d(2, 3) == 2);
    CHECK_THROWS_AS(u_d(0, 2), DomainError);
    CHECK_THROWS_AS(u_d(2, 1), DomainError);
    // overflow is detected, not wrapped
    CHECK_THROWS_AS(checked_binomial(200, 100), OverflowError);
}

TEST_CASE("u_d times n equals dim times d") {
    for (Int n = 1; n <= 6; ++n)
        for (Int d = 2; d <= 5; ++d)
            CHECK(u_d(n, d) * n == checked_binomial(n - 1 + d, d) * d);
}

TEST_CASE("lambda_sup_i") {
    const DominantWeight lam(IntVec{4, 2});
    CHECK(lambda_sup_i(lam, 2, 2) == IntVec{2});
    CHECK(lambda_sup_i(lam, 1, 2) == IntVec{-1});
    // the witness family: last derived weight is (2, 0, ..., 0)
    const Int u = u_d(3, 2);
    const DominantWeight wit(IntVec{u + 1, u - 1, 0});
    CHECK(lambda_sup_i(wit, 3, 2) == IntVec{2, 0});
    CHECK_THROWS_AS(lambda_sup_i(lam, 0, 2), DomainError);
    CHECK_THROWS_AS(lambda_sup_i(lam, 3, 2), DomainError);
}

TEST_CASE("tilde_lambda_sup_i") {
    const DominantWeight lam(IntVec{4, 2});
    CHECK(tilde_lambda_sup_i(lam, 2) == IntVec{5});
    CHECK(tilde_lambda_sup_i(lam, 1) == IntVec{2});
    CHECK(tilde_lambda_sup_i(DominantWeight(IntVec{0, 0, 0}), 1) == IntVec{0, 0});
}

TEST_CASE("tilde minus sup is the constant u_d vector") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const Int n = 1 + static_cast<Int>(rng() % 5);
        const Int d = 2 + static_cast<Int>(rng() % 3);
        const auto lam = random_dominant(rng, n, -8, 8);
        const Int u = u_d(n, d);
        for (Int i = 1; i <= n; ++i) {
            const IntVec a = tilde_lambda_sup_i(lam, i);
            const IntVec b = lambda_sup_i(lam, i, d);
            REQUIRE(a.size() == b.size());
            for (std::size_t t = 0; t < a.size(); ++t) REQUIRE(a[t] - b[t] == u);
            REQUIRE(is_nonincreasing(b));
        }
    }
}

TEST_CASE("mu_bracket_r") {
    CHECK(mu_bracket_r(IntVec{2}, 4) == IntVec{2, 2});
    CHECK(mu_bracket_r(IntVec{}, 5) == IntVec{5});
    const IntVec not_dom = mu_bracket_r(IntVec{2}, 2);
    CHECK(not_dom == IntVec{0, 2});
    CHECK_FALSE(is_nonincreasing(not_dom));
}

TEST_CASE("is_hook") {
    CHECK(is_hook(DominantWeight(IntVec{5, 1, 1})));
    CHECK_FALSE(is_hook(DominantWeight(IntVec{2, 2})));
    CHECK(is_hook(DominantWeight(IntVec{0, 0})));
    CHECK_THROWS_AS(is_hook(DominantWeight(IntVec{1, -1})), DomainError);
}

TEST_CASE("small weight transforms") {
    CHECK(contains(IntVec{3, 2}, IntVec{3, 1}));
    CHECK_FALSE(contains(IntVec{3, 2}, IntVec{4, 0}));
    CHECK(add_k_delta(IntVec{4, 2}, 1, 2) == IntVec{6, 2});
    CHECK(add_k_delta(IntVec{4, 2}, -1, 3) == IntVec{1, 2});
    CHECK(drop_first(IntVec{4, 2, 1}) == IntVec{2, 1});
    CHECK(det_twist(IntVec{4, 2}, -1) == IntVec{3, 1});
    CHECK(dual(IntVec{3, 1, -2}) == IntVec{2, -1, -3});
}

TEST_CASE("round-trip properties of the small transforms") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Int n = 1 + static_cast<Int>(rng() % 5);
        const auto lam = random_dominant(rng, n, -9, 9);
        CHECK(dual(dual(lam.parts())) == lam.parts());
        const Int c = static_cast<Int>(rng() % 11) - 5;
        CHECK(det_twist(det_twist(lam.parts(), c), -c) == lam.parts());
        CHECK(mu_bracket_r(drop_first(lam.parts()), lam.size()) == lam.parts());
    }
}
