#pragma once

// Hilbert polynomials of curves from graded free resolutions of their ideal
// sheaves.  Resolutions are handled purely numerically (ranks and twists);
// every invariant below comes from an alternating sum of twisted Euler
// characteristics of the ambient space.
//
// This is the independent engine the closed-form family formulas are
// validated against.

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "curvedim/numeric.hpp"
#include "curvedim/polynomial.hpp"

namespace curvedim {

/// Ambient space: a projective space P^n (n >= 2) or the smooth quadric
/// threefold Q in P^4 (unique up to isomorphism).
struct Ambient {
    enum class Kind { Projective, QuadricThreefold };

    Kind kind = Kind::Projective;
    int n = 3; // projective dimension when kind == Projective

    static Ambient projective(int n) {
        if (n < 2) throw PreconditionError("Ambient: projective dimension must be >= 2");
        return Ambient{Kind::Projective, n};
    }

    static Ambient quadric_threefold() { return Ambient{Kind::QuadricThreefold, 4}; }

    /// Dimension of the projective space the curve ultimately sits in
    /// (4 for curves on Q).
    int embedding_dim() const { return n; }

    std::string name() const {
        if (kind == Kind::QuadricThreefold) return "Q";
        return "P" + std::to_string(n);
    }

    friend bool operator==(const Ambient& a, const Ambient& b) {
        return a.kind == b.kind && (a.kind == Kind::QuadricThreefold || a.n == b.n);
    }
};

/// chi(O(k)) of the ambient space as a polynomial in k:
///   P^n: C(k+n, n)
///   Q:   C(k+4, 4) - C(k+2, 4)   (hyperplane-ideal sequence of the quadric)
inline RationalPolynomial ambient_chi(const Ambient& a) {
    if (a.kind == Ambient::Kind::QuadricThreefold)
        return binomial_poly(4, 4) - binomial_poly(2, 4);
    return binomial_poly(a.n, static_cast<unsigned>(a.n));
}

/// One direct summand O(twist)^rank of a syzygy module.
struct SyzygyTerm {
    Int rank; // >= 1
    Int twist;
};

/// 0 -> E_m -> ... -> E_1 -> E_0 -> I -> 0 over the given ambient space,
/// where levels[i] lists the summands of E_i.  Only ranks and twists are
/// stored; no maps.
struct GradedResolution {
    Ambient ambient;
    std::vector<std::vector<SyzygyTerm>> levels;

    void validate() const {
        if (levels.empty()) throw PreconditionError("resolution: no syzygy levels");
        for (const auto& level : levels) {
            if (level.empty()) throw PreconditionError("resolution: empty syzygy level");
            for (const auto& term : level)
                if (term.rank < 1) throw PreconditionError("resolution: rank must be >= 1");
        }
    }
};

/// chi(I(k)) = sum_i (-1)^i sum_{(rank, twist) in E_i} rank * chi(O(k + twist)).
inline RationalPolynomial ideal_hilbert_poly(const GradedResolution& res) {
    res.validate();
    const RationalPolynomial chi = ambient_chi(res.ambient);
    RationalPolynomial acc;
    int sign = 1;
    for (const auto& level : res.levels) {
        for (const auto& term : level)
            acc += chi.shifted(Rational(term.twist)) * Rational(sign * term.rank);
        sign = -sign;
    }
    return acc;
}

/// Degree, arithmetic genus and ambient projective dimension of a curve.
struct CurveClass {
    Int d;
    Int g;
    int r; // >= 3

    friend bool operator==(const CurveClass& a, const CurveClass& b) {
        return a.d == b.d && a.g == b.g && a.r == b.r;
    }
};

/// Reads (d, g) off the Hilbert polynomial chi(O(k)) - chi(I(k)) = d*k + 1 - g.
/// Throws NotACurveError when the difference is not linear and
/// NonIntegralError when d or g fails to be an integer.
inline CurveClass curve_class_from_resolution(const GradedResolution& res) {
    const RationalPolynomial p = ambient_chi(res.ambient) - ideal_hilbert_poly(res);
    if (p.degree() != 1)
        throw NotACurveError("resolution: Hilbert polynomial has degree " +
                             std::to_string(p.degree()) + ", expected 1");
    const Rational d = p.coeff(1);
    const Rational g = Rational(1) - p.coeff(0);
    if (rat_den(d) != 1 || rat_den(g) != 1)
        throw NonIntegralError("resolution: non-integral degree or genus");
    return CurveClass{rat_num(d), rat_num(g), res.ambient.embedding_dim()};
}

// ---------------------------------------------------------------------------
// Text format.  One header line and one line per syzygy level:
//
//   ambient P3|P4|Q
//   level 0: RANK x TWIST[, RANK x TWIST]...
//   level 1: ...
//
// Levels must be numbered consecutively from 0.  '#' starts a comment; blank
// lines are ignored.  Ranks must be positive.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline Int parse_int(const std::string& tok, const char* what) {
    if (tok.empty()) throw ParseError(std::string("expected ") + what);
    std::size_t pos = 0;
    if (tok[pos] == '+' || tok[pos] == '-') ++pos;
    if (pos == tok.size()) throw ParseError(std::string("bad ") + what + ": '" + tok + "'");
    for (std::size_t i = pos; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9')
            throw ParseError(std::string("bad ") + what + ": '" + tok + "'");
    return Int(tok);
}

} // namespace detail

inline GradedResolution parse_resolution(std::istream& in) {
    GradedResolution res;
    bool have_ambient = false;
    std::size_t next_level = 0;
    std::string raw;
    while (std::getline(in, raw)) {
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = detail::strip(raw);
        if (line.empty()) continue;

        if (line.rfind("ambient", 0) == 0) {
            if (have_ambient) throw ParseError("duplicate ambient line");
            const std::string tok = detail::strip(line.substr(7));
            if (tok == "P3") res.ambient = Ambient::projective(3);
            else if (tok == "P4") res.ambient = Ambient::projective(4);
            else if (tok == "Q") res.ambient = Ambient::quadric_threefold();
            else throw ParseError("unknown ambient '" + tok + "' (want P3, P4 or Q)");
            have_ambient = true;
            continue;
        }

        if (line.rfind("level", 0) == 0) {
            if (!have_ambient) throw ParseError("level line before ambient line");
            const auto colon = line.find(':');
            if (colon == std::string::npos) throw ParseError("level line missing ':'");
            const Int idx = detail::parse_int(detail::strip(line.substr(5, colon - 5)), "level index");
            if (idx != next_level)
                throw ParseError("expected level " + std::to_string(next_level) +
                                 ", got level " + idx.str());
            std::vector<SyzygyTerm> terms;
            std::string rest = line.substr(colon + 1);
            std::istringstream ts(rest);
            std::string item;
            while (std::getline(ts, item, ',')) {
                const std::string t = detail::strip(item);
                if (t.empty()) throw ParseError("empty term in level " + idx.str());
                const auto x = t.find('x');
                if (x == std::string::npos)
                    throw ParseError("term '" + t + "' missing 'x' separator");
                const Int rank = detail::parse_int(detail::strip(t.substr(0, x)), "rank");
                const Int twist = detail::parse_int(detail::strip(t.substr(x + 1)), "twist");
                if (rank < 1) throw ParseError("rank must be positive, got " + rank.str());
                terms.push_back(SyzygyTerm{rank, twist});
            }
            if (terms.empty()) throw ParseError("level " + idx.str() + " has no terms");
            res.levels.push_back(std::move(terms));
            ++next_level;
            continue;
        }

        throw ParseError("unrecognized line: '" + line + "'");
    }
    if (!have_ambient) throw ParseError("missing ambient line");
    if (res.levels.empty()) throw ParseError("missing level lines");
    return res;
}

inline GradedResolution parse_resolution(const std::string& text) {
    std::istringstream in(text);
    return parse_resolution(in);
}

inline std::string format_resolution(const GradedResolution& res) {
    std::ostringstream os;
    os << "ambient " << res.ambient.name() << "\n";
    for (std::size_t i = 0; i < res.levels.size(); ++i) {
        os << "level " << i << ":";
        for (std::size_t j = 0; j < res.levels[i].size(); ++j) {
            os << (j ? ", " : " ") << res.levels[i][j].rank << " x " << res.levels[i][j].twist;
        }
        os << "\n";
    }
    return os.str();
}

} // namespace curvedim
