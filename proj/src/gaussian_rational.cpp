#include "permfunc/gaussian_rational.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "permfunc/errors.hpp"

namespace permfunc {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// One signed term of a scalar literal, e.g. "-3/4i" or "+2".
void add_term(std::string_view term, Rational& re, Rational& im) {
  bool negative = false;
  if (!term.empty() && (term.front() == '+' || term.front() == '-')) {
    negative = term.front() == '-';
    term.remove_prefix(1);
  }
  bool imaginary = false;
  if (!term.empty() && term.back() == 'i') {
    imaginary = true;
    term.remove_suffix(1);
  }
  Rational value = 1;
  if (!term.empty() || !imaginary) {
    value = parse_rational(term);
  }
  if (negative) {
    value = -value;
  }
  (imaginary ? im : re) += value;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const bool ok = slash == std::string_view::npos
                      ? all_digits(body)
                      : all_digits(body.substr(0, slash)) && all_digits(body.substr(slash + 1));
  if (!ok) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  std::string owned(text.front() == '+' ? text.substr(1) : text);
  Rational q;
  q.set_str(owned, 10);
  if (sgn(q.get_den()) == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  canonicalize();
}

void GaussianRational::canonicalize() {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::pow(std::int64_t e) const {
  if (e < 0) {
    return GaussianRational(1) / pow(-e);
  }
  GaussianRational result(1);
  GaussianRational base = *this;
  while (e > 0) {
    if (e & 1) {
      result *= base;
    }
    e >>= 1;
    if (e > 0) {
      base *= base;
    }
  }
  return result;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational d = o.norm();
  if (sgn(d) == 0) {
    throw DomainError("division by zero");
  }
  *this *= o.conj();
  re_ /= d;
  im_ /= d;
  return *this;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      compact.push_back(c);
    }
  }
  if (compact.empty()) {
    throw ParseError("empty scalar literal");
  }
  // A second sign (not at the front, not right after '/') separates the terms.
  std::size_t split = std::string::npos;
  for (std::size_t k = 1; k < compact.size(); ++k) {
    if ((compact[k] == '+' || compact[k] == '-') && compact[k - 1] != '/') {
      if (split != std::string::npos) {
        throw ParseError("malformed scalar '" + std::string(text) + "'");
      }
      split = k;
    }
  }
  Rational re = 0;
  Rational im = 0;
  std::string_view all(compact);
  if (split == std::string::npos) {
    add_term(all, re, im);
  } else {
    const auto first = all.substr(0, split);
    const auto second = all.substr(split);
    const bool first_imag = first.back() == 'i';
    const bool second_imag = second.back() == 'i';
    if (first_imag || !second_imag) {
      throw ParseError("scalar must be written real part first: '" + std::string(text) + "'");
    }
    add_term(first, re, im);
    add_term(second, re, im);
  }
  return {re, im};
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) {
    return re_.get_str();
  }
  std::string out;
  if (sgn(re_) != 0) {
    out = re_.get_str();
    if (sgn(im_) > 0) {
      out += '+';
    }
  }
  out += im_.get_str();
  out += 'i';
  return out;
}

} // namespace permfunc
