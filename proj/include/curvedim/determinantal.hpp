#pragma once

// Closed-form invariants of determinantal curve families.
//
// In P^3 the family is the curve of maximal minors of an s x (s+1) matrix
// whose row i consists of degree-k_i forms; on the quadric threefold Q it is
// the intersection of Q with the determinantal surface of a t x (t+1) matrix
// of linear forms in P^4.  Degrees, genera and component dimensions all have
// exact integer formulas, each cross-validated elsewhere against the graded
// resolution engine.

#include <algorithm>
#include <optional>
#include <vector>

#include "curvedim/numeric.hpp"
#include "curvedim/resolution.hpp"

namespace curvedim {

/// Row-degree data (k_1, ..., k_s) of an s x (s+1) matrix of forms in P^3.
struct FamilyP3 {
    std::vector<Int> row_degrees; // each >= 1

    explicit FamilyP3(std::vector<Int> rows) : row_degrees(std::move(rows)) {
        if (row_degrees.empty()) throw PreconditionError("FamilyP3: needs at least one row");
        for (const auto& k : row_degrees)
            if (k < 1) throw PreconditionError("FamilyP3: row degrees must be >= 1");
    }

    Int s() const { return Int(static_cast<long long>(row_degrees.size())); }

    /// t = sum k_i, the degree of every maximal minor.
    Int t() const {
        Int v = 0;
        for (const auto& k : row_degrees) v += k;
        return v;
    }

    Int sum_squares() const {
        Int v = 0;
        for (const auto& k : row_degrees) v += k * k;
        return v;
    }

    Int sum_cubes() const {
        Int v = 0;
        for (const auto& k : row_degrees) v += k * k * k;
        return v;
    }

    bool is_uniform() const {
        return std::all_of(row_degrees.begin(), row_degrees.end(),
                           [&](const Int& k) { return k == row_degrees.front(); });
    }
};

struct P3Invariants {
    Int d;
    Int g;
    /// d <= 3: the general member is degenerate in P^3 (a line or conic).
    /// The formulas remain valid; nondegeneracy is the caller's concern.
    bool degenerate;
};

/// Degree and genus of the P^3 family:
///   d = (t^2 + sum k_i^2) / 2
///   g = 1 + (2t^3 - 6t^2 + 3(sum k_i^2)t + sum(k_i^3 - 6k_i^2)) / 6
inline P3Invariants family_p3_invariants(const FamilyP3& f) {
    const Int t = f.t();
    const Int u = f.sum_squares();
    const Int w = f.sum_cubes();
    const Int d2 = t * t + u;
    if (d2 % 2 != 0) throw DomainError("family_p3_invariants: odd degree numerator"); // unreachable
    const Int d = d2 / 2;
    const Int g6 = 2 * t * t * t - 6 * t * t + 3 * u * t + w - 6 * u;
    if (g6 % 6 != 0) throw DomainError("family_p3_invariants: genus numerator not divisible by 6");
    return P3Invariants{d, 1 + g6 / 6, d <= 3};
}

/// Uniform family (all rows of degree t):
///   d = s(s+1)t^2/2,  g = 1 + s(s+1)(2s+1)t^3/6 - s(s+1)t^2.
inline P3Invariants family_p3_uniform_invariants(const Int& s, const Int& t) {
    if (s < 1 || t < 1) throw PreconditionError("uniform family: s, t must be >= 1");
    const Int d = s * (s + 1) * t * t / 2;
    const Int g = 1 + s * (s + 1) * (2 * s + 1) * t * t * t / 6 - s * (s + 1) * t * t;
    return P3Invariants{d, g, d <= 3};
}

/// Parameter count of the uniform-family component:
///   l(s, t) = s(s+1)(t^3 + 6t^2 + 11t - 6)/6,
/// which collapses to 2s(s+1) = 4d in the linear case t = 1.
inline Int family_p3_uniform_dimension(const Int& s, const Int& t) {
    if (s < 1 || t < 1) throw PreconditionError("uniform dimension: s, t must be >= 1");
    const Int num = s * (s + 1) * (t * t * t + 6 * t * t + 11 * t - 6);
    if (num % 6 != 0) throw DomainError("family_p3_uniform_dimension: not divisible by 6");
    return num / 6;
}

/// The t x (t+1) determinantal family on the quadric threefold.
struct FamilyQ {
    Int t; // >= 1
};

struct QInvariants {
    Int d;
    Int g;
    Int dim; // always 3d
};

/// d = t(t+1),  g = (4t^3 - 3t^2 - 7t + 6)/6,  component dimension 3d.
inline QInvariants family_q_invariants(const FamilyQ& f) {
    if (f.t < 1) throw PreconditionError("FamilyQ: t must be >= 1");
    const Int t = f.t;
    const Int d = t * (t + 1);
    const Int g6 = 4 * t * t * t - 3 * t * t - 7 * t + 6;
    if (g6 % 6 != 0) throw DomainError("family_q_invariants: genus numerator not divisible by 6");
    return QInvariants{d, g6 / 6, 3 * d};
}

/// Upper bound for g^2/d^3 over uniform families with s rows:
/// (2/9)(4 + 1/(s^2+s)).  Strict for every uniform family with g >= 0.
inline Rational uniform_ratio_bound(const Int& s) {
    if (s < 1) throw PreconditionError("uniform_ratio_bound: s must be >= 1");
    return Rational(2, 9) * (Rational(4) + Rational(Int(1), s * s + s));
}

/// Mixed-family envelope (8/9)(1+2a)^2/(1+a)^3 in a = u/t^2; its maximum
/// over a >= 0 is 256/243, attained at a = 1/2.
inline Rational mixed_ratio_bound(const Rational& alpha) {
    const Rational one_plus = 1 + alpha;
    return Rational(8, 9) * (1 + 2 * alpha) * (1 + 2 * alpha) / (one_plus * one_plus * one_plus);
}

struct RatioAnalysis {
    Rational ratio;                        // g^2/d^3, exact
    Rational alpha;                        // u/t^2
    std::optional<Rational> uniform_bound; // only for uniform families
};

inline RatioAnalysis ratio_analysis(const FamilyP3& f) {
    const P3Invariants inv = family_p3_invariants(f);
    if (inv.g < 0) throw PreconditionError("ratio_analysis: genus must be >= 0");
    const Int t = f.t();
    RatioAnalysis out{
        Rational(inv.g * inv.g, inv.d * inv.d * inv.d),
        Rational(f.sum_squares(), t * t),
        std::nullopt,
    };
    if (f.is_uniform()) out.uniform_bound = uniform_ratio_bound(f.s());
    return out;
}

/// All row-degree multisets with s <= max_s rows, entries <= max_k, whose
/// family has invariants exactly (d, g).  Multisets are canonicalized in
/// non-decreasing order and returned sorted by (s, lexicographic), so the
/// output is deterministic.
inline std::vector<std::vector<Int>> search_family_p3(const Int& d, const Int& g,
                                                      const Int& max_s = 8,
                                                      const Int& max_k = 8) {
    if (d < 1 || max_s < 1 || max_k < 1)
        throw PreconditionError("search_family_p3: bounds must be >= 1");
    std::vector<std::vector<Int>> found;
    std::vector<Int> rows;
    // DFS over non-decreasing sequences; d grows with every extra row, which
    // prunes the exponential tree early.
    auto rec = [&](auto&& self, const Int& min_k) -> void {
        if (!rows.empty()) {
            const P3Invariants inv = family_p3_invariants(FamilyP3(rows));
            if (inv.d > d) return;
            if (inv.d == d && inv.g == g) found.push_back(rows);
        }
        if (Int(static_cast<long long>(rows.size())) == max_s) return;
        for (Int k = min_k; k <= max_k; ++k) {
            rows.push_back(k);
            self(self, k);
            rows.pop_back();
        }
    };
    rec(rec, 1);
    return found;
}

/// Length-one resolution of the P^3 family's ideal sheaf:
///   0 -> (+)_i O(-t - k_i) -> O(-t)^(s+1) -> I -> 0.
/// Equal twists are grouped into ranks.
inline GradedResolution family_p3_resolution(const FamilyP3& f) {
    const Int t = f.t();
    GradedResolution res;
    res.ambient = Ambient::projective(3);
    res.levels.push_back({SyzygyTerm{f.s() + 1, -t}});
    std::vector<Int> sorted = f.row_degrees;
    std::sort(sorted.begin(), sorted.end());
    std::vector<SyzygyTerm> e1;
    for (const auto& k : sorted) {
        const Int twist = -t - k;
        if (!e1.empty() && e1.back().twist == twist) e1.back().rank += 1;
        else e1.push_back(SyzygyTerm{1, twist});
    }
    res.levels.push_back(std::move(e1));
    return res;
}

/// Resolution of the ideal sheaf on Q of the quadric-threefold family:
///   0 -> O_Q(-t-1)^t -> O_Q(-t)^(t+1) -> I -> 0.
inline GradedResolution family_q_resolution(const FamilyQ& f) {
    if (f.t < 1) throw PreconditionError("FamilyQ: t must be >= 1");
    GradedResolution res;
    res.ambient = Ambient::quadric_threefold();
    res.levels.push_back({SyzygyTerm{f.t + 1, -f.t}});
    res.levels.push_back({SyzygyTerm{f.t, -f.t - 1}});
    return res;
}

} // namespace curvedim
