#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace permfunc {

using Rational = mpq_class;

/// Exact element of Q[i]. Both parts are kept canonical (reduced, positive
/// denominator) after every operation.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {} // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im = 0);

  static GaussianRational i() { return {0, 1}; }

  [[nodiscard]] const Rational& re() const { return re_; }
  [[nodiscard]] const Rational& im() const { return im_; }

  [[nodiscard]] bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  [[nodiscard]] bool is_real() const { return sgn(im_) == 0; }

  [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  [[nodiscard]] Rational norm() const { return re_ * re_ + im_ * im_; }
  [[nodiscard]] std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }

  /// z^e for e >= 0 with 0^0 = 1; negative e requires z != 0.
  [[nodiscard]] GaussianRational pow(std::int64_t e) const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Parses "p", "p/q", "p/q+r/si", "-1i", "2-1i", "i", "-i".
  static GaussianRational parse(std::string_view text);
  /// Inverse of parse: "-85+30i", "3/2", "-1i", "1/2-3/4i".
  [[nodiscard]] std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << z.to_string();
  }

private:
  void canonicalize();

  Rational re_{0};
  Rational im_{0};
};

/// Parses a plain rational "p" or "p/q"; throws ParseError otherwise.
Rational parse_rational(std::string_view text);

} // namespace permfunc
