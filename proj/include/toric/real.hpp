#ifndef TORIC_REAL_HPP
#define TORIC_REAL_HPP

#include <mpfr.h>
#include <string>
#include <utility>
#include "toric/rational.hpp"

namespace toric {

/// Arbitrary-precision real backed by MPFR. Default working precision is
/// 128 bits; pass a precision explicitly to double it near height cutoffs.
class Real {
  public:
    static constexpr mpfr_prec_t kDefaultPrec = 128;

    Real() { mpfr_init2(v_, kDefaultPrec); mpfr_set_zero(v_, 1); }
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(double x, mpfr_prec_t prec = kDefaultPrec) {
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    Real(const Rat& q, mpfr_prec_t prec = kDefaultPrec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    Real(const Int& n, mpfr_prec_t prec = kDefaultPrec) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, n.get_mpz_t(), MPFR_RNDN);
    }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, kDefaultPrec); mpfr_swap(v_, o.v_); }
    Real& operator=(Real o) { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    friend Real operator+(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real& operator+=(const Real& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    friend Real log(const Real& a) {
        Real r(a.prec());
        mpfr_log(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real exp(const Real& a) {
        Real r(a.prec());
        mpfr_exp(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real abs(const Real& a) {
        Real r(a.prec());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real pow(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    std::string str(int digits = 20) const {
        char buf[128];
        mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, v_);
        return buf;
    }

  private:
    mpfr_t v_;
};

inline Real log_rat(const Rat& q, mpfr_prec_t prec = Real::kDefaultPrec) {
    return log(Real(q, prec));
}

}  // namespace toric

#endif
