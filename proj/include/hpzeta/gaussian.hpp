#pragma once

#include <hpzeta/rational.hpp>

#include <complex>
#include <stdexcept>
#include <string>

namespace hpzeta {

/// Element of Q(i): re + im*i with exact rational parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(int value) : re(value), im(0) {}  // NOLINT: implicit by design
    GaussianRational(Rational real, Rational imag = Rational(0))
        : re(std::move(real)), im(std::move(imag)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussianRational conj() const { return GaussianRational(re, -im); }
    Rational norm() const { return re * re + im * im; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    GaussianRational operator-() const { return GaussianRational(-re, -im); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }

    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw std::domain_error("gaussian rational: division by zero");
        const Rational n = b.norm();
        const GaussianRational prod = a * b.conj();
        return GaussianRational(prod.re / n, prod.im / n);
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

inline std::string to_string(const GaussianRational& g) {
    if (g.is_real()) return to_string(g.re);
    if (g.re.is_zero()) return to_string(g.im) + "*i";
    return to_string(g.re) + (g.im > 0 ? "+" : "") + to_string(g.im) + "*i";
}

}  // namespace hpzeta
