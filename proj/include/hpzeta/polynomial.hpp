#pragma once

#include <hpzeta/rational.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace hpzeta {

/// Dense univariate polynomial over an exact field. Coefficients are stored
/// by ascending degree; the highest-index coefficient is nonzero unless the
/// polynomial is zero (empty coefficient vector).
template <class Coeff>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Coeff constant) {
        if (!(constant == Coeff(0))) coeffs_.push_back(std::move(constant));
    }
    explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial variable() { return Polynomial(std::vector<Coeff>{Coeff(0), Coeff(1)}); }
    static Polynomial monomial(std::size_t degree, Coeff lead = Coeff(1)) {
        if (lead == Coeff(0)) return Polynomial();
        std::vector<Coeff> c(degree + 1, Coeff(0));
        c.back() = std::move(lead);
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }
    Coeff coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Coeff(0); }
    const Coeff& leading() const {
        if (is_zero()) throw std::domain_error("polynomial: zero has no leading coefficient");
        return coeffs_.back();
    }

    bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    Polynomial operator-() const {
        Polynomial out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    Polynomial& operator+=(const Polynomial& other) {
        if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Coeff(0));
        for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& other) { return *this += -other; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(out));
    }

    Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

    Polynomial scaled(const Coeff& factor) const {
        if (factor == Coeff(0)) return Polynomial();
        Polynomial out = *this;
        for (auto& c : out.coeffs_) c = c * factor;
        return out;
    }

    /// Exact Horner evaluation.
    Coeff eval(const Coeff& x) const {
        Coeff acc(0);
        for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return Polynomial();
        std::vector<Coeff> out(coeffs_.size() - 1, Coeff(0));
        for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * Coeff(static_cast<int>(k));
        return Polynomial(std::move(out));
    }

    /// Composition p(q(t)) by Horner in q.
    Polynomial compose(const Polynomial& inner) const {
        Polynomial acc;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            acc = acc * inner;
            acc += Polynomial(coeffs_[k]);
        }
        return acc;
    }

    /// Quotient and remainder; the divisor's leading coefficient must be invertible.
    friend std::pair<Polynomial, Polynomial> divmod(Polynomial num, const Polynomial& den) {
        if (den.is_zero()) throw std::domain_error("polynomial: division by zero");
        Polynomial quot;
        const long dd = den.degree();
        while (!num.is_zero() && num.degree() >= dd) {
            const std::size_t shift = static_cast<std::size_t>(num.degree() - dd);
            const Coeff factor = num.leading() / den.leading();
            quot += Polynomial::monomial(shift, factor);
            num -= den * Polynomial::monomial(shift, factor);
        }
        return {std::move(quot), std::move(num)};
    }

    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

    /// Monic normalization: divide through by the leading coefficient.
    Polynomial monic() const {
        if (is_zero()) return *this;
        const Coeff inv = Coeff(1) / leading();
        return scaled(inv);
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == Coeff(0)) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

/// Monic polynomial gcd by the Euclidean algorithm over a field; each
/// remainder is renormalized monic to keep coefficient growth in check.
template <class Coeff>
Polynomial<Coeff> poly_gcd(Polynomial<Coeff> a, Polynomial<Coeff> b) {
    while (!b.is_zero()) {
        Polynomial<Coeff> r = (a % b).monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Polynomials with rational coefficients in one formal variable.
using QPolynomial = Polynomial<Rational>;

/// Exact Horner evaluation of a rational-coefficient polynomial.
inline Rational poly_eval(const QPolynomial& p, const Rational& x) { return p.eval(x); }

/// p(1 - t), the reflection used by the Bernoulli symmetry B_n(1-a) = (-1)^n B_n(a).
inline QPolynomial poly_reflect(const QPolynomial& p) {
    const QPolynomial one_minus_t(std::vector<Rational>{Rational(1), Rational(-1)});
    return p.compose(one_minus_t);
}

/// Floating evaluation used by the numeric bridge.
inline double poly_eval_double(const QPolynomial& p, double x) {
    double acc = 0.0;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * x + to_double(p.coeffs()[k]);
    return acc;
}

}  // namespace hpzeta
