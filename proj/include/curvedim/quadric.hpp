#pragma once

// Dimension analysis for curves on the smooth quadric threefold Q in P^4,
// where the expected dimension is 3d.
//
// Two regimes are computed exactly:
//  * a witness k certifying dimension > 3d once the genus clears
//    d^2/(4k) + kd/2 (with d > 2k(k-1)), and the minimal such genus;
//  * the genus range where a component of dimension exactly 3d is
//    guaranteed, obtained from the determinantal base points
//    (t(t+1), L(t)) and the two smoothing moves
//        (d, g) -> (d+3, g+delta-1), delta <= 4   (attach a twisted cubic)
//        (d, g) -> (d+1, g)                       (attach a line),
//    both as pure (d, g) transition arithmetic.

#include <optional>
#include <vector>

#include "curvedim/numeric.hpp"

namespace curvedim {

/// A degree k certifying that every component through a degree-d genus-g
/// curve on Q has dimension at least bound = 3d + g - kd - 1 > 3d.
struct GBWitness {
    Int k;
    Int bound;
};

/// The witness with the largest certified bound (smallest qualifying k).
/// Returns nothing when no k satisfies d > 2k(k-1) and 4kg > d^2 + 2k^2 d
/// with a resulting bound strictly above 3d.
inline std::optional<GBWitness> gb_witness(const Int& d, const Int& g) {
    if (d < 3) throw PreconditionError("gb_witness: d must be >= 3");
    if (g < 0) throw PreconditionError("gb_witness: g must be >= 0");
    std::optional<GBWitness> best;
    for (Int k = 1; 2 * k * (k - 1) < d; ++k) {
        if (4 * k * g <= d * d + 2 * k * k * d) continue;
        const Int bound = 3 * d + g - k * d - 1;
        if (!best || bound > best->bound) best = GBWitness{k, bound};
    }
    if (best && best->bound <= 3 * d) return std::nullopt; // certifies nothing
    return best;
}

/// Minimal g admitting a witness:
///   min over valid k of max( floor((d^2 + 2k^2 d)/(4k)) + 1, kd + 2 ),
/// all with cleared denominators.  The kd+2 term keeps the certified bound
/// strictly above 3d at the top of the valid k range.
inline Int gb_threshold(const Int& d) {
    if (d < 3) throw PreconditionError("gb_threshold: d must be >= 3");
    std::optional<Int> best;
    for (Int k = 1; 2 * k * (k - 1) < d; ++k) {
        const Int g_ineq = floor_div(d * d + 2 * k * k * d, 4 * k) + 1;
        const Int g_bound = k * d + 2;
        const Int g_min = g_ineq > g_bound ? g_ineq : g_bound;
        if (!best || g_min < *best) best = g_min;
    }
    return *best; // k = 1 is always valid for d >= 3
}

/// Closed integer interval of genera.
struct GenusInterval {
    Int lo;
    Int hi;

    friend bool operator==(const GenusInterval& a, const GenusInterval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

/// Genera reachable from (base_d, base_g) by the two smoothing moves while
/// raising the degree to exactly target_d.  Cubic moves contribute genus
/// increments {0,1,2,3} each, line moves contribute nothing, so the result
/// is the interval [base_g, base_g + 3*floor((target_d - base_d)/3)].
inline GenusInterval smoothing_reach(const Int& base_d, const Int& base_g, const Int& target_d) {
    if (target_d < base_d)
        throw PreconditionError("smoothing_reach: target degree below base degree");
    const Int cubic_moves = (target_d - base_d) / 3;
    return GenusInterval{base_g, base_g + 3 * cubic_moves};
}

/// L(t) = (4t^3 - 3t^2 - 7t + 6)/6: the genus of the degree-t(t+1)
/// determinantal base curve on Q.
inline Int coverage_lo(const Int& t) {
    const Int num = 4 * t * t * t - 3 * t * t - 7 * t + 6;
    if (num % 6 != 0) throw DomainError("coverage_lo: numerator not divisible by 6");
    return num / 6;
}

/// R(t) = L(t) + d - t(t+1) - 2: top of the certified genus interval for a
/// fixed d, including the conservative -2 slack for the line moves.
inline Int coverage_hi(const Int& t, const Int& d) {
    return coverage_lo(t) + d - t * (t + 1) - 2;
}

/// Consecutive base curves keep the covered genus range contiguous when
/// L(t+2) <= R(t).
inline bool stitched(const Int& t, const Int& d) {
    return coverage_lo(t + 2) <= coverage_hi(t, d);
}

/// Equivalent closed form of the stitching condition: d >= 5t^2 + 7t + 3.
/// (L(t+2) - L(t) = 4t^2 + 6t + 1, so L(t+2) <= R(t) rearranges to this.)
inline bool stitched_closed_form(const Int& t, const Int& d) {
    return d >= 5 * t * t + 7 * t + 3;
}

struct CoveragePerT {
    Int t;
    Int L;
    Int R;
    bool stitched;
};

/// Per-degree coverage summary on Q.
struct CoverageReport {
    Int d;
    std::vector<CoveragePerT> per_t;            // every admissible t, ascending
    std::optional<Int> paper_max_g;             // R(t*) of the stitched chain
    std::vector<GenusInterval> closure_intervals; // merged transition closure
};

namespace detail {

inline std::vector<GenusInterval> merge_intervals(std::vector<GenusInterval> iv) {
    std::sort(iv.begin(), iv.end(), [](const GenusInterval& a, const GenusInterval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    std::vector<GenusInterval> out;
    for (const auto& cur : iv) {
        if (!out.empty() && cur.lo <= out.back().hi + 1) {
            if (cur.hi > out.back().hi) out.back().hi = cur.hi;
        } else {
            out.push_back(cur);
        }
    }
    return out;
}

} // namespace detail

/// Full coverage analysis for degree d on Q.
///
/// Admissible base parameters are t = 2, 3, 5, 6, 8, ... (t(t+1) divisible
/// by 3) with t(t+1) <= d.  Rows report [L(t), R(t)] verbatim, empty
/// intervals included.  paper_max_g follows the stitched chain from the
/// smallest admissible t; closure_intervals take the transition closure of
/// every base point instead, which never claims less.
inline CoverageReport coverage_report(const Int& d) {
    if (d < 2) throw PreconditionError("coverage_report: d must be >= 2");
    CoverageReport rep;
    rep.d = d;
    std::vector<GenusInterval> closure;
    bool chain_alive = true;
    for (Int t = 2; t * (t + 1) <= d; ++t) {
        if (t % 3 == 1) continue; // t(t+1) not divisible by 3
        const Int L = coverage_lo(t);
        const Int R = coverage_hi(t, d);
        const bool st = stitched(t, d);
        if (chain_alive) rep.paper_max_g = R;
        chain_alive = chain_alive && st;
        rep.per_t.push_back(CoveragePerT{t, L, R, st});
        closure.push_back(smoothing_reach(t * (t + 1), L, d));
    }
    rep.closure_intervals = detail::merge_intervals(std::move(closure));
    return rep;
}

/// Largest genus reachable contiguously from the lowest covered genus, i.e.
/// the top of the first closure interval.
inline std::optional<Int> closure_max_contiguous(const CoverageReport& rep) {
    if (rep.closure_intervals.empty()) return std::nullopt;
    return rep.closure_intervals.front().hi;
}

} // namespace curvedim
