#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rdegen/errors.hpp"
#include "rdegen/ideal.hpp"
#include "rdegen/linalg.hpp"
#include "rdegen/matching_field.hpp"
#include "rdegen/subsets.hpp"

namespace rdegen {

using Rat = boost::multiprecision::cpp_rational;

/// Monomial in the grid variables x_{i,j}: sorted (row, column) pairs,
/// repeated per exponent.
using XMonomial = std::vector<std::pair<int, int>>;

/// Exact polynomial in the grid variables.  Zero coefficients are never
/// stored; the term map keeps a canonical order.
struct ExactPoly {
    std::map<XMonomial, Rat> terms;

    void add_term(XMonomial m, Rat c) {
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
        ExactPoly out;
        for (const auto& [ma, ca] : a.terms)
            for (const auto& [mb, cb] : b.terms) {
                XMonomial m;
                m.reserve(ma.size() + mb.size());
                std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(),
                           std::back_inserter(m));
                out.add_term(std::move(m), ca * cb);
            }
        return out;
    }
};

namespace detail {
inline int permutation_parity(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2;
}
} // namespace detail

/// Leibniz expansion of the maximal minor on the columns of J:
/// sum over permutations s of sign(s) * prod_i x_{i, j_{s(i)}}.
inline ExactPoly plucker_form(const KSubset& J) {
    const int k = J.k();
    ExactPoly out;
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        XMonomial m;
        m.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            m.emplace_back(i + 1, J[perm[static_cast<std::size_t>(i)]]);
        std::sort(m.begin(), m.end());
        out.add_term(std::move(m), detail::permutation_parity(perm) ? Rat(-1) : Rat(1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Scan all k! arrangements of J against the weight matrix and return
/// the minimal one.  Throws uniqueness_failure if the minimum is attained
/// twice, or if the winning arrangement is neither the sorted order nor
/// the sorted order with the first two entries swapped (no such case is
/// known; this guards the MFColumn representation).
inline MFColumn brute_min_weight_term(const WeightMatrix& M, const KSubset& J) {
    if (J.k() != M.k() || J.n() != M.n())
        throw parameter_error("brute_min_weight_term: subset shape does not match matrix");
    const int k = J.k();
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    int best_weight = 0;
    bool tie = false;
    do {
        int weight = 0;
        for (int i = 0; i < k; ++i) weight += M.at(i + 1, J[perm[static_cast<std::size_t>(i)]]);
        if (best.empty() || weight < best_weight) {
            best_weight = weight;
            tie = false;
            best.clear();
            for (int i = 0; i < k; ++i) best.push_back(J[perm[static_cast<std::size_t>(i)]]);
        } else if (weight == best_weight) {
            tie = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (tie)
        throw uniqueness_failure("brute_min_weight_term: minimum attained twice for P_{" +
                                 J.str() + "}");
    std::vector<int> sorted = J.elements();
    if (best == sorted) return MFColumn{J, std::move(best), ColumnPerm::id};
    std::swap(sorted[0], sorted[1]);
    if (k >= 2 && best == sorted) return MFColumn{J, std::move(best), ColumnPerm::swap12};
    throw uniqueness_failure("brute_min_weight_term: minimal arrangement for P_{" + J.str() +
                             "} is neither sorted nor first-two-swapped");
}

/// Homogeneous degree-d slice of an ideal in the restricted Pluecker
/// variables, as a canonical echelon basis over the degree-d monomials.
///
/// `monomials` lists index tuples into `variables` (nondecreasing, lex
/// order).  `order` is the coordinate order the basis is echelonized in:
/// order[p] = monomial id at elimination position p.  Rows are primitive
/// integer vectors keyed by position.
struct DegreeSlice {
    int degree = 0;
    std::vector<KSubset> variables;
    std::vector<std::vector<int>> monomials;
    std::vector<int> order;
    std::vector<SparseVec> basis;

    [[nodiscard]] long long dim() const { return static_cast<long long>(basis.size()); }

    int monomial_id(const std::vector<int>& tuple) const {
        auto it = std::lower_bound(monomials.begin(), monomials.end(), tuple);
        if (it == monomials.end() || *it != tuple)
            throw parameter_error("DegreeSlice: unknown monomial tuple");
        return static_cast<int>(it - monomials.begin());
    }

    /// Row r as (monomial id, coefficient) pairs sorted by id.
    std::vector<std::pair<int, Int>> row_by_monomial(std::size_t r) const {
        std::vector<std::pair<int, Int>> out;
        out.reserve(basis[r].terms.size());
        for (const auto& [pos, c] : basis[r].terms)
            out.emplace_back(order[static_cast<std::size_t>(pos)], c);
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

    /// Membership of a vector given by (monomial id, coefficient) pairs.
    bool contains(const std::vector<std::pair<int, Int>>& by_id) const {
        std::vector<int> priority(monomials.size());
        for (std::size_t p = 0; p < order.size(); ++p)
            priority[static_cast<std::size_t>(order[p])] = static_cast<int>(p);
        SparseVec v;
        v.terms.reserve(by_id.size());
        for (const auto& [id, c] : by_id)
            v.terms.emplace_back(priority[static_cast<std::size_t>(id)], c);
        std::sort(v.terms.begin(), v.terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return in_row_space(std::move(v), basis);
    }
};

namespace detail {

/// Column-content of a degree-d monomial: the multiset of column indices
/// used by its factors.  The Pluecker substitution is homogeneous for
/// this multigrading, so the kernel splits as a direct sum over contents
/// and each block can be eliminated on its own.
inline std::vector<int> content_of(const std::vector<KSubset>& vars,
                                   const std::vector<int>& tuple) {
    std::vector<int> content;
    for (int t : tuple) {
        const auto& elems = vars[static_cast<std::size_t>(t)].elements();
        content.insert(content.end(), elems.begin(), elems.end());
    }
    std::sort(content.begin(), content.end());
    return content;
}

} // namespace detail

inline constexpr int kOracleDegreeMax = 4;

namespace detail {

/// Exact kernel of the substitution "monomial in P_J |-> product of
/// minors of a generic matrix" on degree-d monomials over `vars`,
/// eliminated blockwise per column-content.
inline DegreeSlice generic_kernel_slice(std::vector<KSubset> vars, int degree) {
    DegreeSlice slice;
    slice.degree = degree;
    slice.variables = std::move(vars);
    slice.monomials = monomial_tuples(static_cast<int>(slice.variables.size()), degree);
    slice.order.resize(slice.monomials.size());
    std::iota(slice.order.begin(), slice.order.end(), 0);

    std::vector<ExactPoly> var_forms;
    var_forms.reserve(slice.variables.size());
    for (const KSubset& J : slice.variables) var_forms.push_back(plucker_form(J));

    std::map<std::vector<int>, std::vector<int>> by_content;
    for (std::size_t id = 0; id < slice.monomials.size(); ++id)
        by_content[detail::content_of(slice.variables, slice.monomials[id])]
            .push_back(static_cast<int>(id));

    for (const auto& [content, ids] : by_content) {
        // Substitute each monomial of the block and index its x-monomials.
        std::vector<ExactPoly> polys;
        polys.reserve(ids.size());
        std::map<XMonomial, int> col_of;
        for (int id : ids) {
            ExactPoly p;
            bool first = true;
            for (int t : slice.monomials[static_cast<std::size_t>(id)]) {
                p = first ? var_forms[static_cast<std::size_t>(t)]
                          : p * var_forms[static_cast<std::size_t>(t)];
                first = false;
            }
            for (const auto& [m, c] : p.terms) col_of.emplace(m, 0);
            polys.push_back(std::move(p));
        }
        int ncols = 0;
        for (auto& [m, idx] : col_of) idx = ncols++;
        // Augmented rows [denominator-cleared substitution | scaled unit]:
        // a combination whose x-part cancels stores, in the unit part,
        // exact kernel coefficients for the original rational rows.
        std::vector<SparseVec> aug;
        aug.reserve(ids.size());
        for (std::size_t local = 0; local < ids.size(); ++local) {
            Int den = 1;
            for (const auto& [m, c] : polys[local].terms)
                den = den / boost::multiprecision::gcd(den, Int(boost::multiprecision::denominator(c))) *
                      Int(boost::multiprecision::denominator(c));
            SparseVec row;
            row.terms.reserve(polys[local].terms.size() + 1);
            for (const auto& [m, c] : polys[local].terms)
                row.terms.emplace_back(col_of[m],
                                       Int(boost::multiprecision::numerator(c)) *
                                           (den / Int(boost::multiprecision::denominator(c))));
            std::sort(row.terms.begin(), row.terms.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            row.terms.emplace_back(ncols + static_cast<int>(local), den);
            aug.push_back(std::move(row));
        }
        for (SparseVec& row : integer_rref(std::move(aug))) {
            if (row.lead_pos() < ncols) continue;  // nonzero substitution: not kernel
            SparseVec kernel_row;
            kernel_row.terms.reserve(row.terms.size());
            for (auto& [pos, c] : row.terms)
                kernel_row.terms.emplace_back(ids[static_cast<std::size_t>(pos - ncols)],
                                              std::move(c));
            slice.basis.push_back(std::move(kernel_row));
        }
    }
    std::sort(slice.basis.begin(), slice.basis.end(),
              [](const SparseVec& a, const SparseVec& b) { return a.lead_pos() < b.lead_pos(); });
    return slice;
}

/// Kernel slice over all C(n,k) variables.  It depends on (k, n, degree)
/// only and every interval's ideal piece is a projection of it, so it is
/// computed once and shared; the lock keeps the cache safe under
/// parallel surveys.
inline const DegreeSlice& full_kernel_slice(int k, int n, int degree) {
    static std::map<std::tuple<int, int, int>, DegreeSlice> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.try_emplace(std::tuple(k, n, degree));
    if (inserted) it->second = generic_kernel_slice(enumerate_subsets(k, n), degree);
    return it->second;
}

} // namespace detail

/// Degree-d part of the ideal of the Richardson variety inside the
/// restricted Pluecker ring: the relations of the full substitution with
/// every variable outside the interval set to zero, re-echelonized over
/// the surviving monomials.  Degrees above `degree_cap` (and above the
/// hard limit 4) are refused.
inline DegreeSlice richardson_ideal_piece(const Interval& T, int degree, int degree_cap = 3) {
    if (degree < 0) throw parameter_error("richardson_ideal_piece: negative degree");
    if (degree > degree_cap || degree > kOracleDegreeMax)
        throw capability_error("richardson_ideal_piece: degree " + std::to_string(degree) +
                               " exceeds the configured bound");
    const DegreeSlice& full = detail::full_kernel_slice(T.v.k(), T.v.n(), degree);
    if (T.size() == static_cast<int>(full.variables.size())) return full;

    DegreeSlice slice;
    slice.degree = degree;
    slice.variables = T.members;
    slice.monomials = monomial_tuples(T.size(), degree);
    slice.order.resize(slice.monomials.size());
    std::iota(slice.order.begin(), slice.order.end(), 0);

    std::vector<int> local_of(full.variables.size(), -1);
    for (std::size_t id = 0; id < full.variables.size(); ++id)
        local_of[id] = T.index_of(full.variables[id]);

    std::vector<SparseVec> rows;
    rows.reserve(full.basis.size());
    for (const SparseVec& src : full.basis) {
        SparseVec row;
        for (const auto& [pos, c] : src.terms) {
            std::vector<int> tuple = full.monomials[static_cast<std::size_t>(pos)];
            bool survives = true;
            for (int& t : tuple) {
                const int local = local_of[static_cast<std::size_t>(t)];
                if (local < 0) {
                    survives = false;
                    break;
                }
                t = local;
            }
            if (survives) row.terms.emplace_back(slice.monomial_id(tuple), c);
        }
        if (row.terms.empty()) continue;
        std::sort(row.terms.begin(), row.terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(row));
    }
    slice.basis = integer_rref(std::move(rows));
    return slice;
}

/// Total induced weight of a monomial tuple.
inline int tuple_weight(const DegreeSlice& slice, const PluckerWeightVector& wv,
                        const std::vector<int>& tuple) {
    int w = 0;
    for (int t : tuple) w += wv.at(slice.variables[static_cast<std::size_t>(t)]);
    return w;
}

/// Space of initial forms of a slice: re-echelonize in the coordinate
/// order "ascending weight, ties lexicographic", then keep each row's
/// minimal-weight part.  The leading monomial of every row survives, so
/// the dimension is preserved and the output stays in echelon form.
inline DegreeSlice initial_space(const DegreeSlice& piece, const PluckerWeightVector& wv) {
    std::vector<int> weight(piece.monomials.size());
    for (std::size_t id = 0; id < piece.monomials.size(); ++id)
        weight[id] = tuple_weight(piece, wv, piece.monomials[id]);

    DegreeSlice out;
    out.degree = piece.degree;
    out.variables = piece.variables;
    out.monomials = piece.monomials;
    out.order.resize(piece.monomials.size());
    std::iota(out.order.begin(), out.order.end(), 0);
    std::sort(out.order.begin(), out.order.end(), [&](int a, int b) {
        if (weight[static_cast<std::size_t>(a)] != weight[static_cast<std::size_t>(b)])
            return weight[static_cast<std::size_t>(a)] < weight[static_cast<std::size_t>(b)];
        return a < b;
    });
    std::vector<int> priority(piece.monomials.size());
    for (std::size_t p = 0; p < out.order.size(); ++p)
        priority[static_cast<std::size_t>(out.order[p])] = static_cast<int>(p);

    std::vector<SparseVec> rows;
    rows.reserve(piece.basis.size());
    for (std::size_t r = 0; r < piece.basis.size(); ++r) {
        SparseVec v;
        v.terms.reserve(piece.basis[r].terms.size());
        for (const auto& [pos, c] : piece.basis[r].terms)
            v.terms.emplace_back(
                priority[static_cast<std::size_t>(piece.order[static_cast<std::size_t>(pos)])], c);
        std::sort(v.terms.begin(), v.terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        rows.push_back(std::move(v));
    }
    for (SparseVec& row : integer_rref(std::move(rows))) {
        const int lead_weight = weight[static_cast<std::size_t>(out.order[static_cast<std::size_t>(row.lead_pos())])];
        SparseVec initial;
        for (auto& [pos, c] : row.terms)
            if (weight[static_cast<std::size_t>(out.order[static_cast<std::size_t>(pos)])] == lead_weight)
                initial.terms.emplace_back(pos, std::move(c));
        make_primitive(initial);
        out.basis.push_back(std::move(initial));
    }
    return out;
}

/// Per-degree comparison of the three candidate descriptions of the
/// degenerate ideal: the span of restricted generator multiples, the
/// kernel slice of the monomial map, and the oracle's initial space.
struct DegreeComparison {
    long long gens = 0;
    long long kernel = 0;
    long long initial = 0;
    bool gens_in_kernel = false;
    bool kernel_in_initial = false;
    bool equal = false;
};

struct VerifyReport {
    int k = 0, n = 0, ell = 0;
    KSubset v, w;
    bool monomial_free = false;
    std::optional<QuadMonomial> witness;          // set when not monomial-free
    std::optional<bool> witness_in_initial;       // witness lies in the degree-2 oracle slice
    std::map<int, DegreeComparison> degrees;      // keyed by degree, 2..D
    bool equal = false;                           // all degrees equal
    std::optional<bool> quad_gen;                 // initial space generated in degree 2
};

namespace detail {

/// Span vectors of { multiplier * generator } at the given degree, as
/// (monomial id, coefficient) rows over the slice's monomial list.
inline std::vector<SparseVec> generator_multiples(const DegreeSlice& slice,
                                                  const RestrictedGenSet& gens) {
    const Interval& T = gens.interval;
    std::vector<std::vector<int>> multipliers = monomial_tuples(T.size(), slice.degree - 2);
    std::vector<SparseVec> rows;
    auto product_id = [&](const std::vector<int>& mult, const KSubset& a, const KSubset& b) {
        std::vector<int> tuple = mult;
        tuple.push_back(T.index_of(a));
        tuple.push_back(T.index_of(b));
        std::sort(tuple.begin(), tuple.end());
        return slice.monomial_id(tuple);
    };
    for (const QuadBinomial& g : gens.binomials)
        for (const std::vector<int>& mult : multipliers) {
            int plus = product_id(mult, g.plus.a, g.plus.b);
            int minus = product_id(mult, g.minus.a, g.minus.b);
            SparseVec v;
            if (plus < minus) v.terms = {{plus, Int(1)}, {minus, Int(-1)}};
            else v.terms = {{minus, Int(-1)}, {plus, Int(1)}};
            rows.push_back(std::move(v));
        }
    for (const QuadMonomial& m : gens.monomials)
        for (const std::vector<int>& mult : multipliers) {
            SparseVec v;
            v.terms = {{product_id(mult, m.a, m.b), Int(1)}};
            rows.push_back(std::move(v));
        }
    return rows;
}

} // namespace detail

/// Compare, degree by degree up to max_degree, the span of restricted
/// generator multiples, the kernel slice of the restricted monomial map,
/// and the initial space of the exactly-computed Richardson ideal piece;
/// and decide whether the initial space is generated in degree 2.
inline VerifyReport verify_theorem_main(const KSubset& v, const KSubset& w, int ell,
                                        int max_degree = 3) {
    Interval T = interval(v, w);
    const int k = v.k(), n = v.n();
    if (max_degree < 2) throw parameter_error("verify_theorem_main: need max_degree >= 2");

    VerifyReport report{k, n, ell, v, w, false, std::nullopt, std::nullopt, {}, false, std::nullopt};
    std::vector<QuadClass> classes = kernel_deg2_classes(k, n, ell);
    FreenessResult freeness = monomial_freeness(classes, T);
    report.monomial_free = freeness.monomial_free;
    report.witness = freeness.witness;
    RestrictedGenSet gens = restrict_generators(quadratic_generators(classes), classes, T);
    PluckerWeightVector wv = weight_vector(k, n, ell);
    std::vector<PhiImage> images = member_phi_images(ell, T);

    DegreeSlice init2, init3;
    bool all_equal = true;
    for (int d = 2; d <= max_degree; ++d) {
        DegreeSlice piece = richardson_ideal_piece(T, d, max_degree);
        DegreeSlice init = initial_space(piece, wv);

        // Fibers of the monomial map on degree-d monomials.
        std::map<PhiImage, std::vector<int>> fibers;
        for (std::size_t id = 0; id < init.monomials.size(); ++id)
            fibers[phi_image_of_tuple(images, init.monomials[id])].push_back(static_cast<int>(id));
        std::vector<int> fiber_of(init.monomials.size());
        {
            int f = 0;
            for (const auto& [img, ids] : fibers) {
                for (int id : ids) fiber_of[static_cast<std::size_t>(id)] = f;
                ++f;
            }
        }

        DegreeComparison cmp;
        cmp.initial = init.dim();
        cmp.kernel = static_cast<long long>(init.monomials.size()) -
                     static_cast<long long>(fibers.size());

        std::vector<SparseVec> gen_rows = detail::generator_multiples(init, gens);
        cmp.gens = rank_of(gen_rows);

        // Generator multiples lie in the kernel slice iff, fiber by
        // fiber, their coefficients sum to zero.
        cmp.gens_in_kernel = true;
        for (const SparseVec& row : gen_rows) {
            std::map<int, Int> sums;
            for (const auto& [id, c] : row.terms)
                sums[fiber_of[static_cast<std::size_t>(id)]] += c;
            for (const auto& [f, s] : sums)
                if (s != 0) { cmp.gens_in_kernel = false; break; }
            if (!cmp.gens_in_kernel) break;
        }

        // Kernel slice inside the initial space: within-fiber differences
        // reduce to zero against the oracle basis.
        cmp.kernel_in_initial = true;
        for (const auto& [img, ids] : fibers) {
            for (std::size_t j = 1; j < ids.size() && cmp.kernel_in_initial; ++j) {
                std::vector<std::pair<int, Int>> diff{{ids[0], Int(-1)}, {ids[j], Int(1)}};
                if (!init.contains(diff)) cmp.kernel_in_initial = false;
            }
            if (!cmp.kernel_in_initial) break;
        }

        cmp.equal = cmp.gens == cmp.kernel && cmp.kernel == cmp.initial &&
                    cmp.gens_in_kernel && cmp.kernel_in_initial;
        all_equal = all_equal && cmp.equal;

        if (d == 2 && !freeness.monomial_free) {
            int witness_id = init.monomial_id(
                {T.index_of(freeness.witness->a), T.index_of(freeness.witness->b)});
            report.witness_in_initial = init.contains({{witness_id, Int(1)}});
        }
        if (d == 2) init2 = init;
        if (d == 3) init3 = std::move(init);
        report.degrees.emplace(d, cmp);
    }
    report.equal = all_equal;

    if (report.monomial_free && max_degree >= 3) {
        // Degree-2 generation of the initial space: variable multiples of
        // the degree-2 initial forms must fill the degree-3 slice.
        std::vector<SparseVec> products;
        for (std::size_t r = 0; r < init2.basis.size(); ++r) {
            std::vector<std::pair<int, Int>> row = init2.row_by_monomial(r);
            for (int t = 0; t < static_cast<int>(init2.variables.size()); ++t) {
                SparseVec prod;
                prod.terms.reserve(row.size());
                for (const auto& [id, c] : row) {
                    std::vector<int> tuple = init2.monomials[static_cast<std::size_t>(id)];
                    tuple.push_back(t);
                    std::sort(tuple.begin(), tuple.end());
                    prod.terms.emplace_back(init3.monomial_id(tuple), c);
                }
                std::sort(prod.terms.begin(), prod.terms.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                products.push_back(std::move(prod));
            }
        }
        report.quad_gen = rank_of(std::move(products)) == init3.dim();
    }
    return report;
}

/// Degree-2 generation check on its own; requires a monomial-free
/// interval (the degeneration hypothesis).
inline bool quadratic_generation_check(const KSubset& v, const KSubset& w, int ell) {
    if (!is_monomial_free(v.k(), v.n(), ell, v, w).monomial_free)
        throw parameter_error("quadratic_generation_check: interval is not monomial-free");
    VerifyReport report = verify_theorem_main(v, w, ell, 3);
    return report.quad_gen.value();
}

} // namespace rdegen
