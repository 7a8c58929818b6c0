#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rdegen/errors.hpp"

namespace rdegen {

/// A k-element subset of {1, ..., n}, stored sorted ascending.
///
/// This is the index set of a Pluecker coordinate.  Sorted order is the
/// only stored order; matching-field (possibly swapped) orderings live in
/// MFColumn, never here.
class KSubset {
public:
    KSubset(std::vector<int> elements, int ambient)
        : elems_(std::move(elements)), n_(ambient) {
        if (n_ < 1) throw parameter_error("KSubset: ambient size must be >= 1");
        if (elems_.empty()) throw parameter_error("KSubset: empty element list");
        for (std::size_t s = 0; s < elems_.size(); ++s) {
            if (elems_[s] < 1 || elems_[s] > n_)
                throw parameter_error("KSubset: element out of range");
            if (s > 0 && elems_[s - 1] >= elems_[s])
                throw parameter_error("KSubset: elements must be strictly increasing");
        }
    }

    [[nodiscard]] int k() const { return static_cast<int>(elems_.size()); }
    [[nodiscard]] int n() const { return n_; }

    /// 0-based access: element at position s, so (*this)[0] is the minimum.
    int operator[](int s) const { return elems_[static_cast<std::size_t>(s)]; }

    const std::vector<int>& elements() const { return elems_; }

    bool contains(int x) const {
        return std::binary_search(elems_.begin(), elems_.end(), x);
    }

    /// Number of elements that are <= bound (i.e. |J ∩ {1..bound}|).
    int count_leq(int bound) const {
        return static_cast<int>(
            std::upper_bound(elems_.begin(), elems_.end(), bound) - elems_.begin());
    }

    /// Textual encoding "1,3,5".
    std::string str() const {
        std::string out;
        for (std::size_t s = 0; s < elems_.size(); ++s) {
            if (s) out += ',';
            out += std::to_string(elems_[s]);
        }
        return out;
    }

    /// Parse the textual encoding; rejects unsorted or out-of-range input.
    static KSubset parse(std::string_view text, int ambient) {
        std::vector<int> elems;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string_view tok = text.substr(
                pos, comma == std::string_view::npos ? std::string_view::npos
                                                     : comma - pos);
            if (tok.empty()) throw parameter_error("KSubset: empty token in subset text");
            int value = 0;
            for (char c : tok) {
                if (c < '0' || c > '9')
                    throw parameter_error("KSubset: non-digit in subset text");
                value = value * 10 + (c - '0');
                if (value > 1'000'000) throw parameter_error("KSubset: element too large");
            }
            elems.push_back(value);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return KSubset(std::move(elems), ambient);
    }

    friend bool operator==(const KSubset& a, const KSubset& b) {
        return a.n_ == b.n_ && a.elems_ == b.elems_;
    }

    /// Lexicographic order on the element lists (ambient must match to be
    /// meaningfully comparable; ties broken by ambient for total order).
    friend std::strong_ordering operator<=>(const KSubset& a, const KSubset& b) {
        if (auto c = a.elems_ <=> b.elems_; c != 0) return c;
        return a.n_ <=> b.n_;
    }

private:
    std::vector<int> elems_;
    int n_;
};

/// Componentwise partial order: a <= b iff a[s] <= b[s] for every position.
inline bool leq(const KSubset& a, const KSubset& b) {
    if (a.k() != b.k() || a.n() != b.n())
        throw parameter_error("leq: size mismatch between subsets");
    for (int s = 0; s < a.k(); ++s)
        if (a[s] > b[s]) return false;
    return true;
}

/// Longest-element involution: I -> {n+1-i : i in I}.  Order-reversing.
inline KSubset w0_act(const KSubset& a) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(a.k()));
    for (int s = a.k() - 1; s >= 0; --s) out.push_back(a.n() + 1 - a[s]);
    return KSubset(std::move(out), a.n());
}

/// All k-subsets of {1..n} in lexicographic order.
inline std::vector<KSubset> enumerate_subsets(int k, int n) {
    if (k <= 0 || k > n) throw parameter_error("enumerate_subsets: need 1 <= k <= n");
    std::vector<KSubset> out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int s = 0; s < k; ++s) cur[static_cast<std::size_t>(s)] = s + 1;
    while (true) {
        out.emplace_back(cur, n);
        // lexicographic successor
        int s = k - 1;
        while (s >= 0 && cur[static_cast<std::size_t>(s)] == n - (k - 1 - s)) --s;
        if (s < 0) break;
        ++cur[static_cast<std::size_t>(s)];
        for (int t = s + 1; t < k; ++t)
            cur[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t - 1)] + 1;
    }
    return out;
}

/// The Richardson interval T = {I : v <= I <= w} in componentwise order,
/// with members listed lexicographically.
struct Interval {
    KSubset v;
    KSubset w;
    std::vector<KSubset> members;

    [[nodiscard]] int size() const { return static_cast<int>(members.size()); }

    bool contains(const KSubset& I) const {
        return std::binary_search(members.begin(), members.end(), I);
    }

    /// Index of I in the lex-ordered member list, or -1 if absent.
    int index_of(const KSubset& I) const {
        auto it = std::lower_bound(members.begin(), members.end(), I);
        if (it == members.end() || !(*it == I)) return -1;
        return static_cast<int>(it - members.begin());
    }
};

inline Interval interval(const KSubset& v, const KSubset& w) {
    if (!leq(v, w))
        throw empty_richardson_error("interval: v is not componentwise <= w");
    Interval T{v, w, {}};
    for (const KSubset& I : enumerate_subsets(v.k(), v.n()))
        if (leq(v, I) && leq(I, w)) T.members.push_back(I);
    return T;
}

} // namespace rdegen
