#include <catch2/catch_amalgamated.hpp>

#include "veronese/multiplicities.hpp"
#include "veronese/suites.hpp"

using namespace veronese;

namespace {

bool all_even(const IntVec& v) {
    for (Int x : v)
        if (pos_mod(x, 2) != 0) return false;
    return true;
}

} // namespace

TEST_CASE("s_mult on powers of the first coordinate") {
    for (Int d : {2, 3})
        for (Int n : {2, 3})
            for (Int k = 0; k <= 3; ++k) {
                IntVec parts(static_cast<std::size_t>(n), 0);
                parts[0] = k * d;
                CHECK(s_mult(DominantWeight(parts), d) == 1);
            }
    CHECK(s_mult(DominantWeight(IntVec{3, 1}), 2) == 0);
    CHECK(s_mult(DominantWeight(IntVec{2, 2}), 2) == 1);
    CHECK(s_mult(DominantWeight(IntVec{3, 1}), 4) == 0); // size not divisible
    CHECK_THROWS_AS(s_mult(DominantWeight(IntVec{1, -1}), 2), DomainError);
}

TEST_CASE("s_mult for d=2 follows the even-parts rule") {
    // classical: Sym(Sym^2) is multiplicity free on even partitions
    for (Int n : {2, 3})
        for (const IntVec& parts : partitions_up_to(8, n)) {
            if (vec_sum(parts) % 2 != 0) continue;
            const Int expected = all_even(parts) ? 1 : 0;
            CHECK(s_mult(DominantWeight(parts), 2) == expected);
        }
}

TEST_CASE("a_pleth") {
    CHECK(a_pleth(DominantWeight(IntVec{2, 2}), 2) == 0);
    CHECK(a_pleth(DominantWeight(IntVec{4, 0}), 2) == 1);
    CHECK(a_pleth(DominantWeight(IntVec{4, 2}), 2) == 1);
}

TEST_CASE("p_mult") {
    for (Int d : {2, 3})
        for (Int k = 1; k <= 3; ++k) {
            IntVec parts{k * d, 0};
            CHECK(p_mult(DominantWeight(parts), d) == 0);
        }
    CHECK(p_mult(DominantWeight(IntVec{2, 2}), 2) == 1);
    CHECK(p_mult(DominantWeight(IntVec{0, 0, 0}), 2) == 1);
}

TEST_CASE("nu_stable for d=2 is the even-parts indicator") {
    for (Int len = 1; len <= 3; ++len)
        for (const IntVec& mu : partitions_up_to(6, len))
            CHECK(nu_stable(mu, 2) == (all_even(mu) ? 1 : 0));
}

TEST_CASE("nu_stable generating function for one part") {
    // d=3: coefficients of 1/((1-t^2)(1-t^3))
    CHECK(nu_stable(IntVec{5}, 3) == 1);
    CHECK(nu_stable(IntVec{6}, 3) == 2);
    CHECK(nu_stable(IntVec{1}, 3) == 0);
    CHECK(nu_stable(IntVec{}, 3) == 1);
    CHECK(nu_stable(IntVec{-1}, 3) == 0);
    CHECK(nu_stable(IntVec{1, 2}, 3) == 0); // not nonincreasing
}

TEST_CASE("nu_at_level") {
    CHECK(nu_at_level(IntVec{2}, 2, 2, 2) == 1);
    CHECK(nu_at_level(IntVec{2}, 1, 2, 2) == 0); // (0,2) is not dominant
    for (Int n : {2, 3})
        for (Int k = 0; k <= 3; ++k)
            CHECK(nu_at_level(IntVec(static_cast<std::size_t>(n - 1), 0), k, 2, n) == 1);
    CHECK_THROWS_AS(nu_at_level(IntVec{2, 3}, 1, 2, 3), DomainError);
}

TEST_CASE("m_lambda") {
    CHECK(m_lambda(DominantWeight(IntVec{4, 2}), 2) == 1);
    CHECK(m_lambda(DominantWeight(IntVec{3, 3}), 2) == -1);
}

TEST_CASE("m_lambda on the witness family") {
    for (Int n : {2, 3, 4})
        for (Int d : {2, 3}) {
            const Int u = u_d(n, d);
            for (Int last = u - d; last <= u - 1; ++last) {
                IntVec parts(static_cast<std::size_t>(n), u - 1);
                parts[0] = u + 1;
                parts[static_cast<std::size_t>(n) - 1] = last;
                CHECK(m_lambda(DominantWeight(parts), d) == 1);
            }
        }
}

TEST_CASE("e_lambda") {
    // d=2: multiplicity one exactly when every part is >= n+1 with odd gap
    for (Int n : {2, 3}) {
        const WeightWindow w(n, 2 * n + 4, 0);
        for (const IntVec& parts : enumerate_window(w)) {
            bool expected = true;
            for (Int x : parts) expected = expected && x >= n + 1 && pos_mod(x - n, 2) == 1;
            CHECK(e_lambda(DominantWeight(parts), 2) == (expected ? 1 : 0));
        }
    }
    for (Int n : {2, 3})
        for (Int d : {2, 3}) {
            const Int u = u_d(n, d);
            CHECK(e_lambda(DominantWeight(IntVec(static_cast<std::size_t>(n), u)), d) == 1);
            IntVec hooky(static_cast<std::size_t>(n), u);
            hooky[0] = u + d;
            CHECK(e_lambda(DominantWeight(hooky), d) == 1);
        }
}

TEST_CASE("a_lambda_j") {
    CHECK(a_lambda_j(DominantWeight(IntVec{3, 3}), 0, 2) == 0);
    CHECK(a_lambda_j(DominantWeight(IntVec{4, 2}), 0, 2) == 1);
    CHECK(a_lambda_j(DominantWeight(IntVec{4, 1}), 1, 2) == 1);
    // off the residue class the multiplicity vanishes by definition
    CHECK(a_lambda_j(DominantWeight(IntVec{4, 1}), 0, 2) == 0);
    CHECK(a_lambda_j(DominantWeight(IntVec{4, 2}), 1, 2) == 0);
    CHECK_THROWS_AS(a_lambda_j(DominantWeight(IntVec{4, 2}), 2, 2), DomainError);
}

TEST_CASE("d2 table predicate") {
    CHECK(d2_table_predicate(DominantWeight(IntVec{4, 2})) == D2Cell::D0);
    CHECK(d2_table_predicate(DominantWeight(IntVec{4, 1})) == D2Cell::D1);
    CHECK(d2_table_predicate(DominantWeight(IntVec{3, 3, 2})) == D2Cell::D0);
    CHECK(d2_table_predicate(DominantWeight(IntVec{3, 3})) == D2Cell::none);
    CHECK(d2_table_predicate(DominantWeight(IntVec{0, 0})) == D2Cell::none);
    CHECK(d2_table_predicate(DominantWeight(IntVec{5, 5, 3})) == D2Cell::D1);
}

TEST_CASE("dj_character slices for d=2, n=2") {
    const WeightWindow w(2, 4, 0);
    const VirtualCharacter d0 = dj_character(0, 2, w);
    const std::map<IntVec, Int> expected0{
        {{2, 0}, 1}, {{2, 2}, 1}, {{4, 0}, 1}, {{4, 2}, 1}, {{4, 4}, 1}};
    CHECK(d0.terms() == expected0);

    const VirtualCharacter d1 = dj_character(1, 2, w);
    const std::map<IntVec, Int> expected1{{{2, 1}, 1}, {{4, 1}, 1}};
    CHECK(d1.terms() == expected1);

    // every reported weight sits in the right residue class
    for (const auto& [lam, m] : d1.terms()) {
        CHECK(pos_mod(vec_sum(lam), 2) == 1);
        CHECK(m == 1);
    }
}

TEST_CASE("dj_character empty window") {
    const WeightWindow w(3, -1, 0); // reversed bounds encode empty
    CHECK(dj_character(0, 2, w).empty());
    CHECK(dj_character(1, 3, w).empty());
}

TEST_CASE("dj_character window residue conflict") {
    const WeightWindow w(2, 4, 0, std::make_pair(Int{1}, Int{2}));
    CHECK_THROWS_AS(dj_character(0, 2, w), DomainError);
    CHECK_NOTHROW(dj_character(1, 2, w));
}

TEST_CASE("e_character slice") {
    const VirtualCharacter e = e_character(2, WeightWindow(2, 5, 0));
    const std::map<IntVec, Int> expected{{{3, 3}, 1}, {{5, 3}, 1}, {{5, 5}, 1}};
    CHECK(e.terms() == expected);
}

TEST_CASE("level multiplicities stabilize upward") {
    CHECK(suite_stabilization(2, 2, 6).pass);
    CHECK(suite_stabilization(3, 2, 4).pass);
    CHECK(suite_stabilization(2, 3, 6).pass);
}

TEST_CASE("sweeps are deterministic across thread counts") {
    const WeightWindow w(3, 6, -2);
    const VirtualCharacter serial = dj_character(0, 2, w, 1);
    const VirtualCharacter threaded = dj_character(0, 2, w, 3);
    CHECK(serial.terms() == threaded.terms());
}
