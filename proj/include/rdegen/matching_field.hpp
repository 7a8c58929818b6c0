#pragma once

#include <utility>
#include <vector>

#include "rdegen/errors.hpp"
#include "rdegen/subsets.hpp"

namespace rdegen {

/// Which reordering of the sorted column a matching field applies.
/// Only the identity and the swap of the two smallest entries occur.
enum class ColumnPerm { id, swap12 };

/// The block-diagonal weight matrix M_ell on the k x n variable grid.
///
/// Entries (1-based indices):
///   row i != 2 :  (i-1) * (n-j+1)
///   row i == 2 :  ell-j+1        for j <= ell
///                 n-j+ell+1      for j >  ell
/// Lowest weight wins everywhere downstream: the initial term of a
/// polynomial is its unique minimal-weight term under this matrix.
class WeightMatrix {
public:
    WeightMatrix(int k, int n, int ell) : k_(k), n_(n), ell_(ell) {
        if (k < 1 || n < 1 || k > n)
            throw parameter_error("WeightMatrix: need 1 <= k <= n");
        if (ell < 0 || ell > n)
            throw parameter_error("WeightMatrix: need 0 <= ell <= n");
        rows_.assign(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n)));
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= n; ++j) {
                int value;
                if (i != 2) value = (i - 1) * (n - j + 1);
                else if (j <= ell) value = ell - j + 1;
                else value = n - j + ell + 1;
                rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = value;
            }
    }

    [[nodiscard]] int k() const { return k_; }
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int ell() const { return ell_; }

    /// 1-based entry access, matching the defining formula.
    int at(int i, int j) const {
        if (i < 1 || i > k_ || j < 1 || j > n_)
            throw parameter_error("WeightMatrix: entry index out of range");
        return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }

private:
    int k_, n_, ell_;
    std::vector<std::vector<int>> rows_;
};

inline WeightMatrix weight_matrix(int k, int n, int ell) { return WeightMatrix(k, n, ell); }

/// The permutation the matching field B_ell assigns to a column:
/// swap the two smallest entries exactly when |J ∩ {1..ell}| = 1
/// (and k >= 2); identity otherwise.
inline ColumnPerm mf_permutation(int ell, const KSubset& J) {
    if (ell < 0 || ell > J.n())
        throw parameter_error("mf_permutation: need 0 <= ell <= n");
    if (J.k() >= 2 && J.count_leq(ell) == 1) return ColumnPerm::swap12;
    return ColumnPerm::id;
}

/// One tableau column in matching-field order: the subset, its entries in
/// the order the matching field writes them (row 1 first), and which
/// permutation that is.
struct MFColumn {
    KSubset subset;
    std::vector<int> ordered_entries;
    ColumnPerm permutation;

    friend bool operator==(const MFColumn& a, const MFColumn& b) {
        return a.subset == b.subset && a.ordered_entries == b.ordered_entries &&
               a.permutation == b.permutation;
    }
};

inline MFColumn mf_column(int ell, const KSubset& J) {
    ColumnPerm p = mf_permutation(ell, J);
    std::vector<int> entries = J.elements();
    if (p == ColumnPerm::swap12) std::swap(entries[0], entries[1]);
    return MFColumn{J, std::move(entries), p};
}

/// M_ell-weight of a column arrangement: sum of M(i, entry in row i).
inline int column_weight(const WeightMatrix& M, const MFColumn& c) {
    int w = 0;
    for (int i = 1; i <= static_cast<int>(c.ordered_entries.size()); ++i)
        w += M.at(i, c.ordered_entries[static_cast<std::size_t>(i - 1)]);
    return w;
}

/// The unique minimal-weight term of the Pluecker form of J under M.
///
/// Closed form: the diagonal term x_{1,j_1}...x_{k,j_k} unless exactly one
/// element of J is <= ell, in which case the two smallest entries swap
/// rows.  brute_min_weight_term in the oracle re-derives this by scanning
/// all k! arrangements; the two must agree everywhere.
inline MFColumn initial_term(const WeightMatrix& M, const KSubset& J) {
    if (J.k() != M.k() || J.n() != M.n())
        throw parameter_error("initial_term: subset shape does not match matrix");
    return mf_column(M.ell(), J);
}

/// The weight the matrix M_ell induces on the Pluecker variable P_J,
/// i.e. the M_ell-weight of its initial term.  Closed form by the size
/// of J ∩ {1..ell}:
///   k = 1             : 0
///   |J ∩ [ell]| = 0   : (n+ell+1-j_2) + sum_{i>=3} (i-1)(n+1-j_i)
///   |J ∩ [ell]| = 1   : (ell+1-j_1)   + sum_{i>=3} (i-1)(n+1-j_i)
///   |J ∩ [ell]| >= 2  : (ell+1-j_2)   + sum_{i>=3} (i-1)(n+1-j_i)
inline int induced_weight(int ell, const KSubset& J) {
    if (ell < 0 || ell > J.n())
        throw parameter_error("induced_weight: need 0 <= ell <= n");
    const int k = J.k();
    const int n = J.n();
    if (k == 1) return 0;
    int tail = 0;
    for (int i = 3; i <= k; ++i) tail += (i - 1) * (n + 1 - J[i - 1]);
    const int hits = J.count_leq(ell);
    if (hits == 0) return (n + ell + 1 - J[1]) + tail;
    if (hits == 1) return (ell + 1 - J[0]) + tail;
    return (ell + 1 - J[1]) + tail;
}

/// Induced weights of every Pluecker variable, in lexicographic subset
/// order.  This is the weight vector w_ell on the Pluecker algebra.
struct PluckerWeightVector {
    int k = 0, n = 0, ell = 0;
    std::vector<std::pair<KSubset, int>> weights;  // lex order on subsets

    int at(const KSubset& J) const {
        auto it = std::lower_bound(
            weights.begin(), weights.end(), J,
            [](const std::pair<KSubset, int>& a, const KSubset& b) { return a.first < b; });
        if (it == weights.end() || !(it->first == J))
            throw parameter_error("PluckerWeightVector: unknown subset");
        return it->second;
    }
};

inline PluckerWeightVector weight_vector(int k, int n, int ell) {
    if (ell < 0 || ell > n)
        throw parameter_error("weight_vector: need 0 <= ell <= n");
    PluckerWeightVector wv{k, n, ell, {}};
    for (const KSubset& J : enumerate_subsets(k, n))
        wv.weights.emplace_back(J, induced_weight(ell, J));
    return wv;
}

/// A tableau whose columns are written in matching-field order.
struct MFTableau {
    int ell = 0;
    std::vector<MFColumn> columns;
};

inline MFTableau mf_tableau(int ell, const std::vector<KSubset>& subsets) {
    MFTableau T{ell, {}};
    T.columns.reserve(subsets.size());
    for (const KSubset& J : subsets) T.columns.push_back(mf_column(ell, J));
    return T;
}

} // namespace rdegen
