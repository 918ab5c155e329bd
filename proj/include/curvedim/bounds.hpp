#pragma once

// Scalar bound formulas: expected dimension chi(N), the Castelnuovo genus
// bound, the minimal-surface-degree function mu(d, g), the two-branch lower
// bound for Hilbert-scheme components of space curves, Gruson-Peskine genus
// thresholds, complete-intersection deformation counts, and Bezout bounds on
// singular loci.  Everything is exact; strict inequalities are evaluated
// with denominators cleared.

#include <optional>
#include <string>
#include <vector>

#include "curvedim/numeric.hpp"
#include "curvedim/resolution.hpp"

namespace curvedim {

/// chi of the normal sheaf of a degree-d genus-g curve in P^r:
/// (r+1)d - (r-3)(g-1).  May be negative for r >= 4 and large g.
inline Int chi_normal(const CurveClass& c) {
    if (c.r < 3) throw PreconditionError("chi_normal: r must be >= 3");
    return Int(c.r + 1) * c.d - Int(c.r - 3) * (c.g - 1);
}

/// Castelnuovo bound pi(d, r): the maximal genus of a reduced irreducible
/// nondegenerate degree-d curve in P^r,
///   pi(d, r) = C(m, 2)(r-1) + m*eps,  m = floor((d-1)/(r-1)),
///   eps = (d-1) - m(r-1).
/// Vanishes in the degenerate/rational-normal regime d <= r.
inline Int castelnuovo_pi(const Int& d, const Int& r) {
    if (d < 1) throw PreconditionError("castelnuovo_pi: d must be >= 1");
    if (r < 2) throw PreconditionError("castelnuovo_pi: r must be >= 2");
    const Int m = (d - 1) / (r - 1);
    const Int eps = (d - 1) - m * (r - 1);
    return m * (m - 1) / 2 * (r - 1) + m * eps;
}

namespace detail {

inline void check_mu_domain(const Int& d, const Int& g) {
    if (d < 3) throw PreconditionError("mu: d must be >= 3");
    if (g * g < d * d * d) throw DomainError("mu: requires g^2 >= d^3");
}

// Cleared-denominator form of g > (d/2)(s + d/(s+1) - 3).
inline bool genus_above_threshold(const Int& d, const Int& g, const Int& s) {
    return 2 * (s + 1) * g > d * (s * (s + 1) + d - 3 * (s + 1));
}

} // namespace detail

/// mu(d, g) = 1 + floor((d^2 - 3d - 2g) / (g + d + sqrt(g^2 - d^3 + 4dg + 4d^2)))
/// on the domain g^2 >= d^3, d >= 3.  Exact throughout.
inline Int mu_closed_form(const Int& d, const Int& g) {
    detail::check_mu_domain(d, g);
    const Int a = d * d - 3 * d - 2 * g;
    const Int b = g + d;
    const Int c = g * g - d * d * d + 4 * d * g + 4 * d * d;
    return 1 + floor_sqrt_expr(a, b, c);
}

/// The smallest s >= 1 with s(s+1) < d and g strictly above the surface
/// threshold (d/2)(s + d/(s+1) - 3).  Agrees with mu_closed_form on the
/// whole admissible range; kept as an independent search for cross-checks.
inline Int mu_minimal_s(const Int& d, const Int& g) {
    detail::check_mu_domain(d, g);
    for (Int s = 1; s * (s + 1) < d; ++s)
        if (detail::genus_above_threshold(d, g, s)) return s;
    throw NoAdmissibleS("mu_minimal_s: no admissible s for d=" + d.str() + ", g=" + g.str());
}

enum class BoundProvenance {
    ExpectedDim,        // chi(N) = (r+1)d - (r-3)(g-1)
    P3LowGenus,         // 4d, on g^2 < d^3
    P3HighGenus,        // 4d + g - 1 - mu(d,g)*d, on g^2 >= d^3
    SurfaceRestriction, // 4d + g - 1 - s*d for an explicit s
    CIDeformation,      // (n+1 - sum d_i)d + (k-n+3)(g-1)
};

inline std::string provenance_name(BoundProvenance p) {
    switch (p) {
        case BoundProvenance::ExpectedDim: return "expected-dimension";
        case BoundProvenance::P3LowGenus: return "low-genus";
        case BoundProvenance::P3HighGenus: return "high-genus";
        case BoundProvenance::SurfaceRestriction: return "surface-restriction";
        case BoundProvenance::CIDeformation: return "ci-deformation";
    }
    return "?";
}

/// A certified dimension lower bound together with the formula that produced
/// it and its integer witnesses (the surface degree s where applicable).
struct BoundCertificate {
    Int value;
    BoundProvenance provenance;
    std::optional<Int> witness_s;
};

/// Dimension lower bound for components of the Hilbert scheme of smooth
/// irreducible nondegenerate degree-d genus-g curves in P^3:
///   4d                      if g^2 <  d^3,
///   4d + g - 1 - mu(d,g)*d  if g^2 >= d^3.
/// Queries with g above pi(d, 3) are vacuous and rejected as OutOfRangeQuery.
inline BoundCertificate lower_bound_p3(const Int& d, const Int& g) {
    if (d < 3) throw PreconditionError("lower_bound_p3: d must be >= 3");
    if (g < 0) throw PreconditionError("lower_bound_p3: g must be >= 0");
    const Int pi = castelnuovo_pi(d, 3);
    if (g > pi)
        throw OutOfRangeQuery("g exceeds pi(" + d.str() + ",3)=" + pi.str());
    if (g * g < d * d * d)
        return BoundCertificate{4 * d, BoundProvenance::P3LowGenus, std::nullopt};
    const Int s = mu_closed_form(d, g);
    return BoundCertificate{4 * d + g - 1 - s * d, BoundProvenance::P3HighGenus, s};
}

/// Genus threshold of the Gruson-Peskine theorem, as printed:
///   (d/2)(s + d/s - 4) - r(s-r)(s-1)/(2s),  0 <= r < s,  d + r = 0 (mod s),
/// meaningful for s(s-1) < d.  Exposed for inspection only; certified bounds
/// use the simplified threshold below, which is what the proofs rely on.
inline Rational gp_original_threshold(const Int& d, const Int& s) {
    if (s < 1) throw PreconditionError("gp_original_threshold: s must be >= 1");
    if (s * (s - 1) >= d)
        throw PreconditionError("gp_original_threshold: requires s(s-1) < d");
    const Int r = ((-d) % s + s) % s;
    const Rational main = Rational(d, 2) * (Rational(s) + Rational(d, s) - 4);
    const Rational corr = Rational(r * (s - r) * (s - 1), 2 * s);
    return main - corr;
}

/// Simplified threshold: true iff s(s+1) < d and g > (d/2)(s + d/(s+1) - 3),
/// in which case the curve lies on a surface of degree at most s.
inline bool gp_simplified_predicate(const Int& d, const Int& g, const Int& s) {
    if (s < 1) throw PreconditionError("gp_simplified_predicate: s must be >= 1");
    return s * (s + 1) < d && detail::genus_above_threshold(d, g, s);
}

/// Deformation dimension of a curve on a degree-s surface in P^3:
/// 4d + g - 1 - s*d.
inline Int surface_restriction_bound(const Int& d, const Int& g, const Int& s) {
    return 4 * d + g - 1 - s * d;
}

/// Deformation dimension of a curve on a complete intersection
/// X = F_1 cap ... cap F_k in P^n with deg F_i = degrees[i]:
/// (n+1 - sum degrees)d + (k-n+3)(g-1).  Requires 1 <= k <= n-2.
inline Int ci_deformation_bound(const Int& n, const std::vector<Int>& degrees,
                                const Int& d, const Int& g) {
    if (n < 3) throw PreconditionError("ci_deformation_bound: n must be >= 3");
    const Int k = static_cast<long long>(degrees.size());
    if (k < 1 || k > n - 2)
        throw PreconditionError("ci_deformation_bound: need 1 <= #degrees <= n-2");
    Int sum = 0;
    for (const auto& di : degrees) {
        if (di < 1) throw PreconditionError("ci_deformation_bound: degrees must be >= 1");
        sum += di;
    }
    return (n + 1 - sum) * d + (k - n + 3) * (g - 1);
}

/// Bezout bound on the degree of the singular locus of a degree-k surface
/// in P^3: k(k-1).
inline Int sing_locus_bound_p3(const Int& k) {
    if (k < 1) throw PreconditionError("sing_locus_bound_p3: k must be >= 1");
    return k * (k - 1);
}

/// Degree bound ab(a+b-2)/2 for the singular locus of a complete
/// intersection surface of type (a, b) in P^4.
inline Int sing_locus_bound_ci_p4(const Int& a, const Int& b) {
    if (a < 1 || b < 1) throw PreconditionError("sing_locus_bound_ci_p4: a, b must be >= 1");
    const Int twice = a * b * (a + b - 2);
    if (twice % 2 != 0) throw DomainError("sing_locus_bound_ci_p4: odd product"); // unreachable
    return twice / 2;
}

} // namespace curvedim
