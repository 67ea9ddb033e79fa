#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

namespace elchi {

// Gaussian rational re + im*i with exact arbitrary-precision components.
// mpq_class keeps each component in lowest terms with positive denominator,
// so structural equality is mathematical equality.
class GaussianRational {
  public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(mpq_class re) : re_(std::move(re)), im_(0) {}
    GaussianRational(mpq_class re, mpq_class im)
        : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational rational(long num, long den) {
        mpq_class q(num, den);
        q.canonicalize();
        return GaussianRational(q);
    }
    static GaussianRational imaginary_unit() {
        return GaussianRational(mpq_class(0), mpq_class(1));
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
        a += b;
        return a;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
        a -= b;
        return a;
    }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
        a *= b;
        return a;
    }

    // division by a nonzero Gaussian rational: multiply by conjugate / norm
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        mpq_class norm = b.re_ * b.re_ + b.im_ * b.im_;
        GaussianRational num = a * b.conj();
        return GaussianRational(num.re_ / norm, num.im_ / norm);
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    std::string str() const {
        if (im_ == 0) return re_.get_str();
        std::string s = re_ == 0 ? "" : re_.get_str();
        std::string it = im_.get_str();
        if (!s.empty() && im_ > 0) s += "+";
        s += it + "*i";
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& q) {
        return os << q.str();
    }

  private:
    mpq_class re_, im_;
};

inline GaussianRational pow(const GaussianRational& base, unsigned e) {
    GaussianRational r(1);
    for (unsigned j = 0; j < e; ++j) r *= base;
    return r;
}

// n! as an exact rational, for series coefficients
inline mpq_class factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return mpq_class(f);
}

}  // namespace elchi
