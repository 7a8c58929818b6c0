#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rdegen/errors.hpp"
#include "rdegen/matching_field.hpp"
#include "rdegen/subsets.hpp"

namespace rdegen {

/// Degree-2 monomial P_a * P_b with a <= b lexicographically.
struct QuadMonomial {
    KSubset a;
    KSubset b;

    static QuadMonomial make(KSubset x, KSubset y) {
        if (y < x) std::swap(x, y);
        return QuadMonomial{std::move(x), std::move(y)};
    }

    std::string str() const {
        return "P_{" + a.str() + "}P_{" + b.str() + "}";
    }

    friend bool operator==(const QuadMonomial&, const QuadMonomial&) = default;
    friend auto operator<=>(const QuadMonomial&, const QuadMonomial&) = default;
};

/// Multiset of grid positions (row, column) hit by the initial terms of a
/// monomial's factors.  Stored sorted with multiplicity; two monomials
/// have the same image exactly when the monomial map identifies them.
using PhiImage = std::vector<std::pair<int, int>>;

inline PhiImage phi_image(int ell, const KSubset& J) {
    MFColumn c = mf_column(ell, J);
    PhiImage img;
    img.reserve(static_cast<std::size_t>(J.k()));
    for (int i = 0; i < J.k(); ++i)
        img.emplace_back(i + 1, c.ordered_entries[static_cast<std::size_t>(i)]);
    std::sort(img.begin(), img.end());
    return img;
}

inline PhiImage phi_image(int ell, const QuadMonomial& m) {
    PhiImage img = phi_image(ell, m.a);
    PhiImage ib = phi_image(ell, m.b);
    img.insert(img.end(), ib.begin(), ib.end());
    std::sort(img.begin(), img.end());
    return img;
}

/// One fiber of the monomial map on degree-2 monomials.
struct QuadClass {
    PhiImage image;
    std::vector<QuadMonomial> monomials;  // lex sorted
};

/// Partition of all degree-2 monomials (squares included) of the Pluecker
/// ring of Gr(k,n) by phi image.  Classes come back ordered by image;
/// classes of size >= 2 span the degree-2 part of the kernel.
inline std::vector<QuadClass> kernel_deg2_classes(int k, int n, int ell) {
    std::vector<KSubset> vars = enumerate_subsets(k, n);
    std::map<PhiImage, std::vector<QuadMonomial>> fibers;
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i; j < vars.size(); ++j) {
            QuadMonomial m{vars[i], vars[j]};
            fibers[phi_image(ell, m)].push_back(std::move(m));
        }
    std::vector<QuadClass> classes;
    classes.reserve(fibers.size());
    for (auto& [image, monomials] : fibers)
        classes.push_back(QuadClass{image, std::move(monomials)});
    return classes;
}

/// Pure difference of two monomials in one fiber; plus is the class
/// representative (lexicographically least member).
struct QuadBinomial {
    QuadMonomial plus;
    QuadMonomial minus;

    std::string str() const { return plus.str() + " - " + minus.str(); }

    friend bool operator==(const QuadBinomial&, const QuadBinomial&) = default;
};

/// Star pattern: every non-representative member minus the representative,
/// one binomial per such member, classes in image order.
inline std::vector<QuadBinomial> quadratic_generators(const std::vector<QuadClass>& classes) {
    std::vector<QuadBinomial> gens;
    for (const QuadClass& cls : classes)
        for (std::size_t j = 1; j < cls.monomials.size(); ++j)
            gens.push_back(QuadBinomial{cls.monomials[j], cls.monomials[0]});
    return gens;
}

inline std::vector<QuadBinomial> quadratic_generators(int k, int n, int ell) {
    return quadratic_generators(kernel_deg2_classes(k, n, ell));
}

/// Generating set after setting the variables outside an interval to zero.
struct RestrictedGenSet {
    Interval interval;
    std::vector<QuadBinomial> binomials;   // all four factors survive
    std::vector<QuadMonomial> monomials;   // surviving member of a class with a vanished member
};

inline bool survives(const QuadMonomial& m, const Interval& T) {
    return T.contains(m.a) && T.contains(m.b);
}

inline RestrictedGenSet restrict_generators(const std::vector<QuadBinomial>& gens,
                                            const std::vector<QuadClass>& classes,
                                            const Interval& T) {
    RestrictedGenSet out{T, {}, {}};
    for (const QuadBinomial& g : gens)
        if (survives(g.plus, T) && survives(g.minus, T)) out.binomials.push_back(g);
    for (const QuadClass& cls : classes) {
        bool any_vanished = false;
        for (const QuadMonomial& m : cls.monomials)
            if (!survives(m, T)) { any_vanished = true; break; }
        if (!any_vanished) continue;
        for (const QuadMonomial& m : cls.monomials)
            if (survives(m, T)) out.monomials.push_back(m);
    }
    return out;
}

struct FreenessResult {
    bool monomial_free = true;
    std::optional<QuadMonomial> witness;  // a surviving monomial generator when not free
};

/// Semantic monomial-freeness test: the restricted degree-2 generating set
/// contains a monomial exactly when some fiber mixes surviving and
/// vanished members.  Witness = first surviving member of the first such
/// fiber in class order.
inline FreenessResult monomial_freeness(const std::vector<QuadClass>& classes,
                                        const Interval& T) {
    for (const QuadClass& cls : classes) {
        const QuadMonomial* surviving = nullptr;
        bool vanished = false;
        for (const QuadMonomial& m : cls.monomials) {
            if (survives(m, T)) {
                if (!surviving) surviving = &m;
            } else {
                vanished = true;
            }
        }
        if (surviving && vanished) return FreenessResult{false, *surviving};
    }
    return FreenessResult{true, std::nullopt};
}

inline FreenessResult is_monomial_free(int k, int n, int ell, const KSubset& v,
                                       const KSubset& w) {
    Interval T = interval(v, w);
    return monomial_freeness(kernel_deg2_classes(k, n, ell), T);
}

/// Closed-form classifier, Schubert side.  k = 1 is trivially free (the
/// ideal is zero); otherwise free iff ell is outside {1..n-k+1} or
/// w_1 in {1, ell, n-k+1} or w_2 <= ell or w_2 = w_1 + 1.
inline bool classify_w(const KSubset& w, int ell) {
    const int k = w.k(), n = w.n();
    if (k == 1) return true;
    if (ell == 0 || ell > n - k + 1) return true;
    const int w1 = w[0], w2 = w[1];
    if (w1 == 1 || w1 == ell || w1 == n - k + 1) return true;
    if (w2 <= ell || w2 == w1 + 1) return true;
    return false;
}

/// Closed-form classifier, opposite side: free iff ell outside
/// {1..n-k+1} or v_1 >= ell+1 or v_2 in {v_1 + 1, ell + 1}.
inline bool classify_v(const KSubset& v, int ell) {
    const int k = v.k(), n = v.n();
    if (k == 1) return true;
    if (ell == 0 || ell > n - k + 1) return true;
    const int v1 = v[0], v2 = v[1];
    if (v1 >= ell + 1) return true;
    if (v2 == v1 + 1 || v2 == ell + 1) return true;
    return false;
}

/// Richardson classifier: the two sides are independent.
inline bool classify_richardson(const KSubset& v, const KSubset& w, int ell) {
    if (!leq(v, w))
        throw empty_richardson_error("classify_richardson: v is not <= w");
    return classify_w(w, ell) && classify_v(v, ell);
}

/// Membership in the zero set Z_{k,n}: subsets of the form
/// (1,...,k-1,i) with k <= i <= n, or (1,...,i-hat,...,k,k+1) with
/// 1 <= i <= k-1.  Restricting to the interval below such a w kills
/// every quadratic relation.
inline bool in_zero_set(const KSubset& w) {
    const int k = w.k();
    bool form_a = true;
    for (int s = 0; s + 1 < k; ++s)
        if (w[s] != s + 1) { form_a = false; break; }
    if (form_a) return true;  // last element is then automatically >= k
    return w[k - 1] == k + 1 && w.contains(k);
}

inline bool schubert_restriction_is_zero(const KSubset& w) { return in_zero_set(w); }

inline bool opposite_restriction_is_zero(const KSubset& v) {
    return in_zero_set(w0_act(v));
}

/// All degree-d monomials over nvars variables as nondecreasing index
/// tuples in lexicographic order.
inline std::vector<std::vector<int>> monomial_tuples(int nvars, int degree) {
    if (degree < 0) throw parameter_error("monomial_tuples: negative degree");
    std::vector<std::vector<int>> out;
    if (degree == 0) { out.emplace_back(); return out; }
    if (nvars <= 0) return out;
    std::vector<int> cur(static_cast<std::size_t>(degree), 0);
    while (true) {
        out.push_back(cur);
        int s = degree - 1;
        while (s >= 0 && cur[static_cast<std::size_t>(s)] == nvars - 1) --s;
        if (s < 0) break;
        int next = cur[static_cast<std::size_t>(s)] + 1;
        for (int t = s; t < degree; ++t) cur[static_cast<std::size_t>(t)] = next;
    }
    return out;
}

/// Image of a degree-d monomial given as an index tuple into `members`.
inline PhiImage phi_image_of_tuple(const std::vector<PhiImage>& member_images,
                                   const std::vector<int>& tuple) {
    PhiImage img;
    for (int idx : tuple) {
        const PhiImage& f = member_images[static_cast<std::size_t>(idx)];
        img.insert(img.end(), f.begin(), f.end());
    }
    std::sort(img.begin(), img.end());
    return img;
}

inline std::vector<PhiImage> member_phi_images(int ell, const Interval& T) {
    std::vector<PhiImage> images;
    images.reserve(T.members.size());
    for (const KSubset& J : T.members) images.push_back(phi_image(ell, J));
    return images;
}

/// Dimension of the degree-d slice of the quotient by the restricted
/// kernel: the number of distinct phi images among degree-d monomials in
/// the interval's variables.
inline long long quotient_dimension(int ell, const Interval& T, int degree) {
    std::vector<PhiImage> images = member_phi_images(ell, T);
    std::set<PhiImage> distinct;
    for (const std::vector<int>& tuple : monomial_tuples(T.size(), degree))
        distinct.insert(phi_image_of_tuple(images, tuple));
    return static_cast<long long>(distinct.size());
}

} // namespace rdegen
