#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "rdegen/errors.hpp"
#include "rdegen/matching_field.hpp"
#include "rdegen/subsets.hpp"

namespace rdegen {

/// Rectangular filling of a k x d grid with entries in {1..n}, stored
/// column-major.  Columns need not be sorted; SSYT-ness is a predicate,
/// not an invariant.
class Tableau {
public:
    Tableau(int rows, std::vector<std::vector<int>> columns, int ambient)
        : rows_(rows), n_(ambient), cols_(std::move(columns)) {
        validate();
    }

    // rows_ must be read out of `columns` before cols_ moves it; member
    // initializers run in declaration order, so this is well defined.
    Tableau(std::vector<std::vector<int>> columns, int ambient)
        : rows_(columns.empty()
                    ? throw parameter_error("Tableau: rows unknown for empty tableau")
                    : static_cast<int>(columns.front().size())),
          n_(ambient), cols_(std::move(columns)) {
        validate();
    }

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return static_cast<int>(cols_.size()); }
    [[nodiscard]] int ambient() const { return n_; }

    int at(int r, int c) const {
        return cols_[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
    }

    const std::vector<int>& column(int c) const {
        return cols_[static_cast<std::size_t>(c)];
    }

    std::vector<std::vector<int>> row_lists() const {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(rows_));
        for (int r = 0; r < rows_; ++r) {
            out[static_cast<std::size_t>(r)].reserve(cols_.size());
            for (int c = 0; c < cols(); ++c)
                out[static_cast<std::size_t>(r)].push_back(at(r, c));
        }
        return out;
    }

    /// Text form: rows joined by ';', entries by ',' — "1,2;3,4".
    std::string str() const {
        std::string out;
        for (int r = 0; r < rows_; ++r) {
            if (r) out += ';';
            for (int c = 0; c < cols(); ++c) {
                if (c) out += ',';
                out += std::to_string(at(r, c));
            }
        }
        return out;
    }

    friend bool operator==(const Tableau& a, const Tableau& b) {
        return a.rows_ == b.rows_ && a.n_ == b.n_ && a.cols_ == b.cols_;
    }

private:
    void validate() const {
        if (rows_ < 1) throw parameter_error("Tableau: need at least one row");
        if (n_ < 1) throw parameter_error("Tableau: ambient size must be >= 1");
        for (const auto& col : cols_) {
            if (static_cast<int>(col.size()) != rows_)
                throw parameter_error("Tableau: ragged column");
            for (int e : col)
                if (e < 1 || e > n_) throw parameter_error("Tableau: entry out of range");
        }
    }

    int rows_, n_;
    std::vector<std::vector<int>> cols_;
};

/// Semistandard: columns strictly increase downward, rows weakly
/// increase rightward.
inline bool is_ssyt(const Tableau& T) {
    for (int c = 0; c < T.cols(); ++c)
        for (int r = 1; r < T.rows(); ++r)
            if (T.at(r - 1, c) >= T.at(r, c)) return false;
    for (int r = 0; r < T.rows(); ++r)
        for (int c = 1; c < T.cols(); ++c)
            if (T.at(r, c - 1) > T.at(r, c)) return false;
    return true;
}

/// All k x d SSYT whose columns lie in the interval [v, w], in
/// lexicographic column order.  A column sequence is semistandard exactly
/// when it is a weakly increasing chain in the componentwise order.
inline std::vector<Tableau> enumerate_ssyt(const KSubset& v, const KSubset& w, int d) {
    if (d < 0) throw parameter_error("enumerate_ssyt: negative degree");
    Interval T = interval(v, w);
    std::vector<Tableau> out;
    std::vector<std::vector<int>> cols;
    auto rec = [&](auto&& self, int depth, int first) -> void {
        if (depth == d) {
            out.emplace_back(v.k(), cols, v.n());
            return;
        }
        for (std::size_t m = static_cast<std::size_t>(first); m < T.members.size(); ++m) {
            if (!cols.empty()) {
                const std::vector<int>& prev = cols.back();
                bool ok = true;
                for (int s = 0; s < v.k(); ++s)
                    if (prev[static_cast<std::size_t>(s)] > T.members[m][s]) { ok = false; break; }
                if (!ok) continue;
            }
            cols.push_back(T.members[m].elements());
            self(self, depth + 1, 0);
            cols.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

/// Row content comparison: same shape and, in every row, the same
/// multiset of entries.
inline bool row_wise_equal(const Tableau& A, const Tableau& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw parameter_error("row_wise_equal: shape mismatch");
    std::vector<int> ra, rb;
    for (int r = 0; r < A.rows(); ++r) {
        ra.clear(); rb.clear();
        for (int c = 0; c < A.cols(); ++c) { ra.push_back(A.at(r, c)); rb.push_back(B.at(r, c)); }
        std::sort(ra.begin(), ra.end());
        std::sort(rb.begin(), rb.end());
        if (ra != rb) return false;
    }
    return true;
}

/// View a matching-field tableau as a plain grid (entries in the order
/// the matching field writes them).
inline Tableau as_tableau(const MFTableau& T) {
    if (T.columns.empty())
        throw parameter_error("as_tableau: empty matching-field tableau");
    std::vector<std::vector<int>> cols;
    cols.reserve(T.columns.size());
    for (const MFColumn& c : T.columns) cols.push_back(c.ordered_entries);
    return Tableau(T.columns.front().subset.k(), std::move(cols),
                   T.columns.front().subset.n());
}

/// Sort every row ascending; fails if the result is not column-strict.
/// For grids coming from diagonal matching-field tableaux this is the
/// unique row-wise-equal SSYT.
inline Tableau row_sort_normalize(const Tableau& T) {
    std::vector<std::vector<int>> rows = T.row_lists();
    for (auto& row : rows) std::sort(row.begin(), row.end());
    std::vector<std::vector<int>> cols(
        static_cast<std::size_t>(T.cols()),
        std::vector<int>(static_cast<std::size_t>(T.rows())));
    for (int r = 0; r < T.rows(); ++r)
        for (int c = 0; c < T.cols(); ++c)
            cols[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] =
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    Tableau out(T.rows(), std::move(cols), T.ambient());
    for (int c = 0; c < out.cols(); ++c)
        for (int r = 1; r < out.rows(); ++r)
            if (out.at(r - 1, c) >= out.at(r, c))
                throw normalization_error("row_sort_normalize: column violation after sorting");
    return out;
}

/// Column exchange sending a two-column SSYT to a matching-field tableau
/// with the same row content pattern as the target matching field.
///
/// With columns I = (i_1 < ... < i_k), J = (j_1 < ... < j_k):
///   (a) i_1, i_2, j_1 <= ell < j_2 and i_1 < j_1 < i_2, or
///   (b) i_1 <= ell < i_2, j_1, j_2 and j_1 < i_2 < j_2:
///       I' = {j_1, i_2, i_3, ..., i_k},  J' = {i_1, j_2, j_3, ..., j_k};
///   otherwise the identity.
/// The result is returned with both columns written in matching-field
/// order.
inline MFTableau gamma_ell(int ell, const Tableau& T) {
    if (T.cols() != 2) throw parameter_error("gamma_ell: expected a two-column tableau");
    if (!is_ssyt(T)) throw parameter_error("gamma_ell: input is not semistandard");
    if (ell < 0 || ell > T.ambient())
        throw parameter_error("gamma_ell: need 0 <= ell <= n");
    const int k = T.rows(), n = T.ambient();
    KSubset I(T.column(0), n), J(T.column(1), n);
    if (k >= 2) {
        const int i1 = I[0], i2 = I[1], j1 = J[0], j2 = J[1];
        const bool case_a = i1 <= ell && i2 <= ell && j1 <= ell && j2 > ell &&
                            i1 < j1 && j1 < i2;
        const bool case_b = i1 <= ell && i2 > ell && j1 > ell && j2 > ell &&
                            j1 < i2 && i2 < j2;
        if (case_a || case_b) {
            // I' = {j_1, i_2, i_3, ...}, J' = {i_1, j_2, j_3, ...}; both
            // stay sorted because j_1 < i_2 and i_1 <= ell < j_2.
            std::vector<int> ip = I.elements(), jp = J.elements();
            ip[0] = j1;
            jp[0] = i1;
            return mf_tableau(ell, {KSubset(std::move(ip), n), KSubset(std::move(jp), n)});
        }
    }
    return mf_tableau(ell, {I, J});
}

/// Vanishing correspondence: whether T survives restriction to [v, w] in
/// the diagonal picture versus whether gamma_ell(T) survives in the
/// block-diagonal one.  Returns (vanishes at ell=0, vanishes at ell).
inline std::pair<bool, bool> vanish_correspondence(int ell, const Tableau& T,
                                                   const KSubset& v, const KSubset& w) {
    if (!leq(v, w)) throw empty_richardson_error("vanish_correspondence: v not <= w");
    auto outside = [&](const KSubset& I) { return !leq(v, I) || !leq(I, w); };
    bool vanish0 = false;
    for (int c = 0; c < T.cols(); ++c)
        if (outside(KSubset(T.column(c), T.ambient()))) { vanish0 = true; break; }
    MFTableau G = gamma_ell(ell, T);
    bool vanish_ell = false;
    for (const MFColumn& col : G.columns)
        if (outside(col.subset)) { vanish_ell = true; break; }
    return {vanish0, vanish_ell};
}

/// Image of gamma_ell over all two-column SSYT with columns in [v, w],
/// deduplicated up to row-wise equality (equivalently, by phi image of
/// the column pair).  Order follows the SSYT enumeration.
inline std::vector<MFTableau> image_gamma_restricted(int ell, const KSubset& v,
                                                     const KSubset& w) {
    std::vector<MFTableau> out;
    std::vector<std::vector<int>> seen;  // sorted row-content keys
    for (const Tableau& T : enumerate_ssyt(v, w, 2)) {
        MFTableau G = gamma_ell(ell, T);
        std::vector<int> key;
        for (int r = 0; r < T.rows(); ++r) {
            int a = G.columns[0].ordered_entries[static_cast<std::size_t>(r)];
            int b = G.columns[1].ordered_entries[static_cast<std::size_t>(r)];
            key.push_back(std::min(a, b));
            key.push_back(std::max(a, b));
        }
        if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
            seen.push_back(std::move(key));
            out.push_back(std::move(G));
        }
    }
    return out;
}

} // namespace rdegen
