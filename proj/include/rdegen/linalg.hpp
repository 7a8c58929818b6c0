#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rdegen/errors.hpp"

namespace rdegen {

using Int = boost::multiprecision::cpp_int;

/// Sparse integer vector: (position, coefficient) pairs sorted by
/// position, no zero coefficients stored.
struct SparseVec {
    std::vector<std::pair<int, Int>> terms;

    [[nodiscard]] bool empty() const { return terms.empty(); }
    [[nodiscard]] int lead_pos() const { return terms.front().first; }
    [[nodiscard]] const Int& lead_coeff() const { return terms.front().second; }

    const Int* coeff_at(int pos) const {
        auto it = std::lower_bound(terms.begin(), terms.end(), pos,
                                   [](const std::pair<int, Int>& t, int p) { return t.first < p; });
        if (it == terms.end() || it->first != pos) return nullptr;
        return &it->second;
    }
};

/// a*x - b*y, merging the sorted supports.
inline SparseVec linear_combine(const Int& a, const SparseVec& x, const Int& b,
                                const SparseVec& y) {
    SparseVec out;
    out.terms.reserve(x.terms.size() + y.terms.size());
    std::size_t i = 0, j = 0;
    while (i < x.terms.size() || j < y.terms.size()) {
        if (j == y.terms.size() ||
            (i < x.terms.size() && x.terms[i].first < y.terms[j].first)) {
            out.terms.emplace_back(x.terms[i].first, a * x.terms[i].second);
            ++i;
        } else if (i == x.terms.size() || y.terms[j].first < x.terms[i].first) {
            out.terms.emplace_back(y.terms[j].first, -b * y.terms[j].second);
            ++j;
        } else {
            Int c = a * x.terms[i].second - b * y.terms[j].second;
            if (c != 0) out.terms.emplace_back(x.terms[i].first, std::move(c));
            ++i; ++j;
        }
    }
    return out;
}

/// Divide by the content (gcd of coefficients) and make the leading
/// coefficient positive.  Keeping rows primitive after every combination
/// is what holds entry growth down in place of strict sequential
/// pivot-division.
inline void make_primitive(SparseVec& v) {
    if (v.empty()) return;
    Int g = 0;
    for (const auto& [pos, c] : v.terms) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    const bool flip = v.lead_coeff() < 0;
    if (g != 1 || flip)
        for (auto& [pos, c] : v.terms) {
            if (g != 1) c /= g;
            if (flip) c = -c;
        }
}

/// Canonical reduced echelon basis of the span of `rows` over the
/// rationals, represented by primitive integer vectors with positive
/// leading coefficients.  All arithmetic stays in the integers
/// (cross-multiplication + content reduction); the output is the unique
/// primitive rescaling of the rational RREF, so it does not depend on
/// the input order.
inline std::vector<SparseVec> integer_rref(std::vector<SparseVec> rows) {
    std::vector<SparseVec> basis;
    std::map<int, std::size_t> pivot_at;  // leading position -> basis index
    for (SparseVec& incoming : rows) {
        SparseVec r = std::move(incoming);
        make_primitive(r);
        while (!r.empty()) {
            auto it = pivot_at.find(r.lead_pos());
            if (it == pivot_at.end()) break;
            const SparseVec& p = basis[it->second];
            r = linear_combine(p.lead_coeff(), r, r.lead_coeff(), p);
            make_primitive(r);
        }
        if (r.empty()) continue;
        pivot_at.emplace(r.lead_pos(), basis.size());
        basis.push_back(std::move(r));
    }
    // Clear pivot positions from every other row, rightmost pivot first.
    for (auto it = pivot_at.rbegin(); it != pivot_at.rend(); ++it) {
        const auto [pos, idx] = *it;
        for (std::size_t t = 0; t < basis.size(); ++t) {
            if (t == idx) continue;
            const Int* c = basis[t].coeff_at(pos);
            if (!c) continue;
            basis[t] = linear_combine(basis[idx].lead_coeff(), basis[t], *c, basis[idx]);
            make_primitive(basis[t]);
        }
    }
    std::sort(basis.begin(), basis.end(),
              [](const SparseVec& a, const SparseVec& b) { return a.lead_pos() < b.lead_pos(); });
    return basis;
}

inline long long rank_of(std::vector<SparseVec> rows) {
    return static_cast<long long>(integer_rref(std::move(rows)).size());
}

/// Whether v lies in the row space of an echelon basis (as produced by
/// integer_rref).  Reduction in leading-position order; membership over
/// the rationals.
inline bool in_row_space(SparseVec v, const std::vector<SparseVec>& basis) {
    std::map<int, std::size_t> pivot_at;
    for (std::size_t i = 0; i < basis.size(); ++i) pivot_at.emplace(basis[i].lead_pos(), i);
    make_primitive(v);
    while (!v.empty()) {
        auto it = pivot_at.find(v.lead_pos());
        if (it == pivot_at.end()) return false;
        const SparseVec& p = basis[it->second];
        v = linear_combine(p.lead_coeff(), v, v.lead_coeff(), p);
        make_primitive(v);
    }
    return true;
}

} // namespace rdegen
