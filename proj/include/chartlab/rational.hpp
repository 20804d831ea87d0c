#ifndef CHARTLAB_RATIONAL_HPP
#define CHARTLAB_RATIONAL_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace chartlab::sym {

/// Exact Gaussian rational a + b*i with arbitrary-precision components.
/// This is the coefficient field of every symbolic expression.
class GaussRat {
public:
  GaussRat() : re_(0), im_(0) {}
  GaussRat(long n) : re_(n), im_(0) {}
  GaussRat(long num, long den) : re_(num, den), im_(0) { re_.canonicalize(); }
  explicit GaussRat(mpq_class re) : re_(std::move(re)), im_(0) {}
  GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussRat operator-() const { return GaussRat(-re_, -im_); }
  GaussRat operator+(const GaussRat& o) const { return GaussRat(re_ + o.re_, im_ + o.im_); }
  GaussRat operator-(const GaussRat& o) const { return GaussRat(re_ - o.re_, im_ - o.im_); }
  GaussRat operator*(const GaussRat& o) const {
    return GaussRat(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  }
  GaussRat& operator+=(const GaussRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }

  GaussRat inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    mpq_class n = re_ * re_ + im_ * im_;
    return GaussRat(re_ / n, -im_ / n);
  }
  GaussRat operator/(const GaussRat& o) const { return *this * o.inverse(); }

  bool operator==(const GaussRat& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const GaussRat& o) const { return !(*this == o); }

  /// Total order used only for canonical term ordering.
  int compare(const GaussRat& o) const {
    int c = cmp(re_, o.re_);
    if (c != 0) return c;
    return cmp(im_, o.im_);
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  GaussRat conj() const { return GaussRat(re_, -im_); }

private:
  mpq_class re_, im_;
};

std::string to_string(const mpq_class& q);

} // namespace chartlab::sym

#endif
