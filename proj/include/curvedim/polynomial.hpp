#pragma once

// Dense univariate polynomials with exact rational coefficients.  These
// carry Hilbert polynomials: small degree, evaluated and compared exactly.

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "curvedim/numeric.hpp"

namespace curvedim {

class RationalPolynomial {
public:
    RationalPolynomial() = default;

    /// Coefficients by ascending power; trailing zeros are stripped.
    explicit RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    static RationalPolynomial constant(Rational c) {
        return RationalPolynomial({std::move(c)});
    }

    static RationalPolynomial variable() {
        return RationalPolynomial({Rational(0), Rational(1)});
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, with -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& coeff(std::size_t i) const {
        static const Rational zero{0};
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }

    const Rational& leading() const {
        static const Rational zero{0};
        return coeffs_.empty() ? zero : coeffs_.back();
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational eval(const Rational& x) const {
        Rational acc{0};
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    RationalPolynomial operator-() const {
        auto c = coeffs_;
        for (auto& v : c) v = -v;
        return RationalPolynomial(std::move(c));
    }

    RationalPolynomial& operator+=(const RationalPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }

    RationalPolynomial& operator-=(const RationalPolynomial& o) { return *this += -o; }

    RationalPolynomial& operator*=(const Rational& c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& v : coeffs_) v *= c;
        return *this;
    }

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
        a += b;
        return a;
    }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) {
        a -= b;
        return a;
    }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) {
        a *= c;
        return a;
    }
    friend RationalPolynomial operator*(const Rational& c, RationalPolynomial a) {
        a *= c;
        return a;
    }

    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return RationalPolynomial(std::move(c));
    }

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// p(k + t): substitute a shifted variable.
    RationalPolynomial shifted(const Rational& t) const {
        const RationalPolynomial lin({t, Rational(1)});
        RationalPolynomial acc;
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * lin + constant(coeffs_[i]);
        return acc;
    }

    std::string str(std::string_view var = "k") const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Rational& c = coeffs_[i];
            if (c == 0) continue;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            const Rational ac = abs(c);
            if (i == 0 || ac != 1) os << ac;
            if (i > 0) {
                if (ac != 1) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// C(k + offset, n) expanded as a polynomial in k:
/// prod_{i=1..n} (k + offset - i + 1) / n!, the constant 1 for n = 0.
/// Valid for every integer argument via the falling-factorial convention,
/// which is what makes twisted Euler characteristics polynomial in k.
inline RationalPolynomial binomial_poly(const Int& offset, unsigned n) {
    RationalPolynomial p = RationalPolynomial::constant(Rational(1));
    for (unsigned i = 1; i <= n; ++i)
        p = p * RationalPolynomial({Rational(offset - i + 1), Rational(1)});
    return p * Rational(Int(1), factorial(n));
}

} // namespace curvedim
