#include <catch2/catch_amalgamated.hpp>

#include "rdegen/matching_field.hpp"
#include "rdegen/oracle.hpp"
#include "rdegen/subsets.hpp"

#include <vector>

using namespace rdegen;

TEST_CASE("weight matrix entries, k=3 n=5") {
    // Diagonal case: row i is (i-1)*(n-j+1).
    WeightMatrix M0 = weight_matrix(3, 5, 0);
    CHECK(M0.rows()[0] == std::vector<int>{0, 0, 0, 0, 0});
    CHECK(M0.rows()[1] == std::vector<int>{5, 4, 3, 2, 1});
    CHECK(M0.rows()[2] == std::vector<int>{10, 8, 6, 4, 2});

    // Block case ell=3: row 2 is (3,2,1,5,4), other rows as diagonal.
    WeightMatrix M3 = weight_matrix(3, 5, 3);
    CHECK(M3.rows()[0] == std::vector<int>{0, 0, 0, 0, 0});
    CHECK(M3.rows()[1] == std::vector<int>{3, 2, 1, 5, 4});
    CHECK(M3.rows()[2] == std::vector<int>{10, 8, 6, 4, 2});

    CHECK(M3.at(2, 3) == 1);
    CHECK_THROWS_AS(M3.at(0, 1), parameter_error);
    CHECK_THROWS_AS(M3.at(1, 6), parameter_error);
}

TEST_CASE("ell=n matches the diagonal matrix entrywise") {
    for (auto [k, n] : {std::pair{2, 4}, {3, 5}, {3, 6}})
        CHECK(weight_matrix(k, n, n).rows() == weight_matrix(k, n, 0).rows());
}

TEST_CASE("induced weight vectors frozen from the worked examples") {
    // k=3, n=5, subsets in lex order.
    const std::vector<int> w0 = {10, 8, 6, 7, 5, 4, 7, 5, 4, 4};
    const std::vector<int> w3 = {8, 6, 4, 5, 3, 5, 5, 3, 4, 3};
    PluckerWeightVector v0 = weight_vector(3, 5, 0);
    PluckerWeightVector v3 = weight_vector(3, 5, 3);
    auto subs = enumerate_subsets(3, 5);
    REQUIRE(subs.size() == w0.size());
    for (std::size_t i = 0; i < subs.size(); ++i) {
        CHECK(v0.at(subs[i]) == w0[i]);
        CHECK(v3.at(subs[i]) == w3[i]);
        CHECK(induced_weight(0, subs[i]) == w0[i]);
        CHECK(induced_weight(3, subs[i]) == w3[i]);
    }
}

TEST_CASE("matching field permutation rule") {
    // swap12 exactly when one element lands in the first block (k >= 2).
    CHECK(mf_permutation(2, KSubset({1, 3, 4}, 6)) == ColumnPerm::swap12);
    CHECK(mf_permutation(2, KSubset({1, 2, 4}, 6)) == ColumnPerm::id);
    CHECK(mf_permutation(2, KSubset({3, 4, 5}, 6)) == ColumnPerm::id);
    CHECK(mf_permutation(0, KSubset({1, 3, 4}, 6)) == ColumnPerm::id);
    CHECK(mf_permutation(6, KSubset({1, 3, 4}, 6)) == ColumnPerm::id);
    CHECK(mf_permutation(3, KSubset({2}, 4)) == ColumnPerm::id);  // k=1
}

TEST_CASE("mf_column orders entries by the permutation") {
    MFColumn c = mf_column(2, KSubset({2, 4, 5}, 6));
    CHECK(c.ordered_entries == std::vector<int>{4, 2, 5});
    CHECK(c.permutation == ColumnPerm::swap12);
    MFColumn d = mf_column(2, KSubset({1, 2, 5}, 6));
    CHECK(d.ordered_entries == std::vector<int>{1, 2, 5});
    CHECK(d.permutation == ColumnPerm::id);
}

TEST_CASE("initial term validates shape") {
    WeightMatrix M = weight_matrix(3, 5, 2);
    CHECK_THROWS_AS(initial_term(M, KSubset({1, 2}, 5)), parameter_error);
    CHECK_THROWS_AS(initial_term(M, KSubset({1, 2, 3}, 6)), parameter_error);
}

TEST_CASE("initial term equals the brute-force minimum everywhere small") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= 3 && k <= n; ++k)
            for (int ell = 0; ell <= n; ++ell) {
                WeightMatrix M = weight_matrix(k, n, ell);
                for (const auto& J : enumerate_subsets(k, n)) {
                    MFColumn fast = initial_term(M, J);
                    MFColumn brute = brute_min_weight_term(M, J);
                    CHECK(fast.ordered_entries == brute.ordered_entries);
                    CHECK(fast.permutation == brute.permutation);
                }
            }
}

TEST_CASE("induced weight equals the weight of the initial term") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= 3 && k <= n; ++k)
            for (int ell = 0; ell <= n; ++ell) {
                WeightMatrix M = weight_matrix(k, n, ell);
                for (const auto& J : enumerate_subsets(k, n))
                    CHECK(induced_weight(ell, J) == column_weight(M, initial_term(M, J)));
            }
}

TEST_CASE("mf_tableau keeps column order and applies the field per column") {
    MFTableau T = mf_tableau(3, {KSubset({1, 3}, 5), KSubset({2, 5}, 5)});
    REQUIRE(T.columns.size() == 2);
    CHECK(T.columns[0].ordered_entries == std::vector<int>{1, 3});  // both in the block: id
    CHECK(T.columns[1].ordered_entries == std::vector<int>{5, 2});  // one in the block: swap
}
