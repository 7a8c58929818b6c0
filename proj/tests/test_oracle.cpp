#include <catch2/catch_amalgamated.hpp>

#include "rdegen/ideal.hpp"
#include "rdegen/matching_field.hpp"
#include "rdegen/oracle.hpp"
#include "rdegen/subsets.hpp"
#include "rdegen/tableaux.hpp"

#include <utility>
#include <vector>

using namespace rdegen;

namespace {

Interval full_interval(int k, int n) {
    std::vector<int> bottom(static_cast<std::size_t>(k)), top(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        bottom[static_cast<std::size_t>(i)] = i + 1;
        top[static_cast<std::size_t>(i)] = n - k + i + 1;
    }
    return interval(KSubset(bottom, n), KSubset(top, n));
}

} // namespace

TEST_CASE("plucker_form is the Leibniz expansion") {
    ExactPoly f = plucker_form(KSubset({1, 2}, 4));
    REQUIRE(f.terms.size() == 2);
    CHECK(f.terms.at(XMonomial{{1, 1}, {2, 2}}) == Rat(1));
    CHECK(f.terms.at(XMonomial{{1, 2}, {2, 1}}) == Rat(-1));

    ExactPoly g = plucker_form(KSubset({1, 2, 3}, 5));
    REQUIRE(g.terms.size() == 6);
    CHECK(g.terms.at(XMonomial{{1, 1}, {2, 2}, {3, 3}}) == Rat(1));
    // One transposition away from the diagonal.
    CHECK(g.terms.at(XMonomial{{1, 3}, {2, 2}, {3, 1}}) == Rat(-1));
}

TEST_CASE("three-term quadric vanishes identically in the grid variables") {
    const int n = 4;
    ExactPoly acc = plucker_form(KSubset({1, 2}, n)) * plucker_form(KSubset({3, 4}, n));
    ExactPoly b = plucker_form(KSubset({1, 3}, n)) * plucker_form(KSubset({2, 4}, n));
    ExactPoly c = plucker_form(KSubset({1, 4}, n)) * plucker_form(KSubset({2, 3}, n));
    for (const auto& [m, co] : b.terms) acc.add_term(m, -co);
    for (const auto& [m, co] : c.terms) acc.add_term(m, co);
    CHECK(acc.terms.empty());
}

TEST_CASE("brute-force minimum matches the closed-form initial term, k=4") {
    // The k<=3 range is swept elsewhere; this exercises 24 arrangements
    // per column and the uniqueness guard on a bigger grid.
    for (int ell : {0, 3, 7}) {
        WeightMatrix M = weight_matrix(4, 7, ell);
        for (const KSubset& J : enumerate_subsets(4, 7))
            CHECK(brute_min_weight_term(M, J) == initial_term(M, J));
    }
}

TEST_CASE("full Grassmannian degree-2 slice is the classical quadric") {
    DegreeSlice slice = richardson_ideal_piece(full_interval(2, 4), 2);
    REQUIRE(slice.dim() == 1);
    REQUIRE(slice.variables.size() == 6);
    CHECK(slice.monomials.size() == 21);

    // Variables in lex order: P12 P13 P14 P23 P24 P34 -> ids 0..5.
    const int m_12_34 = slice.monomial_id({0, 5});
    const int m_13_24 = slice.monomial_id({1, 4});
    const int m_14_23 = slice.monomial_id({2, 3});
    std::vector<std::pair<int, Int>> row = slice.row_by_monomial(0);
    REQUIRE(row.size() == 3);
    CHECK(row[0] == std::pair<int, Int>(m_12_34, 1));
    CHECK(row[1] == std::pair<int, Int>(m_13_24, -1));
    CHECK(row[2] == std::pair<int, Int>(m_14_23, 1));
}

TEST_CASE("restricting an interval projects generators, never just intersects") {
    // T = [{1,2}, {2,4}] in Gr(2,4) kills P34.  The quadric has exactly
    // one term with P34, so its image is the binomial P13P24 - P14P23;
    // the intersection of the kernel with the subring would be zero.
    Interval T = interval(KSubset({1, 2}, 4), KSubset({2, 4}, 4));
    REQUIRE(T.size() == 5);
    DegreeSlice slice = richardson_ideal_piece(T, 2);
    REQUIRE(slice.dim() == 1);

    // Local variables in lex order: P12 P13 P14 P23 P24 -> ids 0..4.
    const int m_13_24 = slice.monomial_id({1, 4});
    const int m_14_23 = slice.monomial_id({2, 3});
    std::vector<std::pair<int, Int>> row = slice.row_by_monomial(0);
    REQUIRE(row.size() == 2);
    CHECK(row[0] == std::pair<int, Int>(m_13_24, 1));
    CHECK(row[1] == std::pair<int, Int>(m_14_23, -1));

    CHECK(slice.monomials.size() == 15);
    CHECK(enumerate_ssyt(KSubset({1, 2}, 4), KSubset({2, 4}, 4), 2).size() == 14);
}

TEST_CASE("codimension of every slice is the tableau count") {
    const std::vector<std::pair<int, int>> shapes = {{2, 4}, {2, 5}, {3, 5}};
    for (auto [k, n] : shapes) {
        std::vector<KSubset> subsets = enumerate_subsets(k, n);
        for (const KSubset& v : subsets)
            for (const KSubset& w : subsets) {
                if (!leq(v, w)) continue;
                Interval T = interval(v, w);
                for (int d = 2; d <= 3; ++d) {
                    DegreeSlice slice = richardson_ideal_piece(T, d);
                    const long long codim =
                        static_cast<long long>(slice.monomials.size()) - slice.dim();
                    CHECK(codim == static_cast<long long>(enumerate_ssyt(v, w, d).size()));
                }
            }
    }
}

TEST_CASE("initial space keeps only the minimal-weight parts") {
    // ell=0 on Gr(2,4): weights P12:3 P13:2 P14:1 P23:2 P24:1 P34:1.
    // The quadric's terms weigh 4, 3, 3 -> the weight-4 term P12P34 drops.
    DegreeSlice piece = richardson_ideal_piece(full_interval(2, 4), 2);
    DegreeSlice init = initial_space(piece, weight_vector(2, 4, 0));
    REQUIRE(init.dim() == 1);
    std::vector<std::pair<int, Int>> row = init.row_by_monomial(0);
    REQUIRE(row.size() == 2);
    CHECK(row[0] == std::pair<int, Int>(init.monomial_id({1, 4}), 1));
    CHECK(row[1] == std::pair<int, Int>(init.monomial_id({2, 3}), -1));
}

TEST_CASE("slice membership testing") {
    DegreeSlice slice = richardson_ideal_piece(full_interval(2, 4), 2);
    CHECK(slice.contains(slice.row_by_monomial(0)));
    // A lone monomial is never in the toric kernel.
    CHECK_FALSE(slice.contains({{slice.monomial_id({0, 5}), Int(1)}}));
    CHECK_THROWS_AS(slice.monomial_id({0, 0, 0}), parameter_error);
    CHECK_THROWS_AS(slice.monomial_id({6, 6}), parameter_error);
}

TEST_CASE("degree capability bounds") {
    Interval tiny = interval(KSubset({1, 2}, 4), KSubset({1, 2}, 4));
    CHECK(richardson_ideal_piece(tiny, 4, 4).dim() == 0);
    CHECK_THROWS_AS(richardson_ideal_piece(tiny, 4), capability_error);
    CHECK_THROWS_AS(richardson_ideal_piece(tiny, 5, 5), capability_error);
    CHECK_THROWS_AS(richardson_ideal_piece(tiny, -1), parameter_error);
}

TEST_CASE("verify report on the full Gr(2,4), ell=0") {
    VerifyReport rep =
        verify_theorem_main(KSubset({1, 2}, 4), KSubset({3, 4}, 4), 0, 3);
    CHECK(rep.monomial_free);
    CHECK_FALSE(rep.witness.has_value());
    CHECK_FALSE(rep.witness_in_initial.has_value());
    REQUIRE(rep.degrees.count(2) == 1);
    REQUIRE(rep.degrees.count(3) == 1);
    const DegreeComparison& d2 = rep.degrees.at(2);
    CHECK(d2.gens == 1);
    CHECK(d2.kernel == 1);
    CHECK(d2.initial == 1);
    CHECK(d2.equal);
    const DegreeComparison& d3 = rep.degrees.at(3);
    CHECK(d3.gens == 6);
    CHECK(d3.kernel == 6);
    CHECK(d3.initial == 6);
    CHECK(d3.equal);
    CHECK(rep.equal);
    REQUIRE(rep.quad_gen.has_value());
    CHECK(*rep.quad_gen);
}

TEST_CASE("verify report at a tuple with a surviving witness") {
    // ell=2 on Gr(3,6), v={1,3,5}, w={3,5,6}: the fiber scan finds a
    // monomial, it lies in the degree-2 initial space, and the spaces
    // cannot agree there.
    KSubset v({1, 3, 5}, 6), w({3, 5, 6}, 6);
    VerifyReport rep = verify_theorem_main(v, w, 2, 2);
    CHECK_FALSE(rep.monomial_free);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->str() == "P_{1,4,5}P_{3,5,6}");
    REQUIRE(rep.witness_in_initial.has_value());
    CHECK(*rep.witness_in_initial);
    REQUIRE(rep.degrees.count(2) == 1);
    CHECK_FALSE(rep.degrees.at(2).equal);
    CHECK_FALSE(rep.equal);
    CHECK_FALSE(rep.quad_gen.has_value());
}

TEST_CASE("quadratic generation check") {
    CHECK(quadratic_generation_check(KSubset({1, 2}, 4), KSubset({3, 4}, 4), 0));
    CHECK_THROWS_AS(
        quadratic_generation_check(KSubset({1, 3, 5}, 6), KSubset({3, 5, 6}, 6), 2),
        parameter_error);
}

TEST_CASE("verify rejects bad degree bounds") {
    CHECK_THROWS_AS(verify_theorem_main(KSubset({1, 2}, 4), KSubset({3, 4}, 4), 0, 1),
                    parameter_error);
}
