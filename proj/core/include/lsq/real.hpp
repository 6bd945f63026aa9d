#pragma once

#include "lsq/intutil.hpp"

#include <mpfr.h>

#include <string>
#include <utility>

namespace lsq {

// thin RAII wrapper over mpfr_t; precision in bits
class Real {
  public:
    explicit Real(mpfr_prec_t prec = 256) { mpfr_init2(x_, prec); mpfr_set_ui(x_, 0, MPFR_RNDN); }
    Real(Real const& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_swap(x_, o.x_); }
    Real& operator=(Real o) { mpfr_swap(x_, o.x_); return *this; }
    ~Real() { mpfr_clear(x_); }

    static Real from(Int const& z, mpfr_prec_t prec)
    {
        Real r(prec);
        mpfr_set_z(r.x_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static Real from(Rat const& q, mpfr_prec_t prec)
    {
        Real r(prec);
        mpfr_set_q(r.x_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static Real from(double d, mpfr_prec_t prec)
    {
        Real r(prec);
        mpfr_set_d(r.x_, d, MPFR_RNDN);
        return r;
    }
    static Real pi(mpfr_prec_t prec)
    {
        Real r(prec);
        mpfr_const_pi(r.x_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }

    friend Real operator+(Real const& a, Real const& b)
    {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(Real const& a, Real const& b)
    {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(Real const& a, Real const& b)
    {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(Real const& a, Real const& b)
    {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    Real operator-() const
    {
        Real r(prec());
        mpfr_neg(r.x_, x_, MPFR_RNDN);
        return r;
    }

    friend bool operator<(Real const& a, Real const& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator>(Real const& a, Real const& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator<=(Real const& a, Real const& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
    friend bool operator>=(Real const& a, Real const& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }

    Real sqrt() const { return apply(mpfr_sqrt); }
    Real abs() const { return apply(mpfr_abs); }
    Real log() const { return apply(mpfr_log); }
    Real exp() const { return apply(mpfr_exp); }
    Real cos() const { return apply(mpfr_cos); }
    Real sin() const { return apply(mpfr_sin); }

    static Real atan2(Real const& y, Real const& x)
    {
        Real r(std::max(y.prec(), x.prec()));
        mpfr_atan2(r.x_, y.x_, x.x_, MPFR_RNDN);
        return r;
    }
    // real fourth root of a positive value
    Real root4() const
    {
        Real r(prec());
        mpfr_rootn_ui(r.x_, x_, 4, MPFR_RNDN);
        return r;
    }

    Int floor() const
    {
        Real t(prec());
        mpfr_floor(t.x_, x_);
        Int z;
        mpfr_get_z(z.get_mpz_t(), t.x_, MPFR_RNDZ);
        return z;
    }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(x_); }
    int sign() const { return mpfr_sgn(x_); }

  private:
    using Unary = int (*)(mpfr_t, mpfr_srcptr, mpfr_rnd_t);
    Real apply(Unary f) const
    {
        Real r(prec());
        f(r.x_, x_, MPFR_RNDN);
        return r;
    }
    mpfr_t x_;
};

struct Complex {
    Real re, im;

    friend Complex operator+(Complex const& a, Complex const& b)
    {
        return {a.re + b.re, a.im + b.im};
    }
    friend Complex operator-(Complex const& a, Complex const& b)
    {
        return {a.re - b.re, a.im - b.im};
    }
    friend Complex operator*(Complex const& a, Complex const& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(Complex const& a, Complex const& b)
    {
        Real n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    Real abs() const { return (re * re + im * im).sqrt(); }
    Real arg() const { return Real::atan2(im, re); }  // principal value in (-pi, pi]
};

}  // namespace lsq
