#include "lietriple/scalar.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace lietriple {

Scalar::Scalar(long num, long den) : re_(num, den), im_(0) {
  if (den == 0) throw DivisionByZeroError("scalar denominator is zero");
  re_.canonicalize();
}

Scalar Scalar::from_parts(mpq_class re, mpq_class im) {
  return Scalar(std::move(re), std::move(im));
}

Scalar Scalar::imaginary(long num, long den) {
  if (den == 0) throw DivisionByZeroError("scalar denominator is zero");
  mpq_class im(num, den);
  im.canonicalize();
  return Scalar(mpq_class(0), std::move(im));
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero scalar");
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

namespace {

std::string rat_str(const mpq_class& q) {
  std::ostringstream os;
  os << q.get_num();
  if (q.get_den() != 1) os << '/' << q.get_den();
  return os.str();
}

// One signed rational term, optionally ending in 'i'.
struct Term {
  mpq_class value;
  bool imaginary = false;
};

Term parse_term(std::string_view t) {
  if (t.empty()) throw ParseError("empty scalar term");
  Term out;
  if (t.back() == 'i') {
    out.imaginary = true;
    t.remove_suffix(1);
  }
  int sign = 1;
  if (!t.empty() && (t.front() == '+' || t.front() == '-')) {
    if (t.front() == '-') sign = -1;
    t.remove_prefix(1);
  }
  if (t.empty()) {
    // bare "i" / "-i"
    if (!out.imaginary) throw ParseError("empty scalar term");
    out.value = sign;
    return out;
  }
  std::string num, den = "1";
  auto slash = t.find('/');
  if (slash == std::string_view::npos) {
    num.assign(t);
  } else {
    num.assign(t.substr(0, slash));
    den.assign(t.substr(slash + 1));
  }
  auto all_digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed scalar term '" + std::string(t) + "'");
  mpq_class q{mpz_class(num), mpz_class(den)};
  if (q.get_den() == 0) throw DivisionByZeroError("scalar denominator is zero");
  q.canonicalize();
  out.value = sign * q;
  return out;
}

} // namespace

std::string Scalar::str() const {
  if (sgn(im_) == 0) return rat_str(re_);
  std::string imag = rat_str(abs(im_)) + "i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return rat_str(re_) + (sgn(im_) < 0 ? "-" : "+") + imag;
}

Scalar Scalar::parse(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
  if (cleaned.empty()) throw ParseError("empty scalar");

  // Split at the last top-level +/- that is not a leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t p = 1; p < cleaned.size(); ++p)
    if (cleaned[p] == '+' || cleaned[p] == '-') split = p;

  if (split == std::string::npos) {
    Term t = parse_term(cleaned);
    return t.imaginary ? Scalar(mpq_class(0), t.value) : Scalar(t.value, mpq_class(0));
  }
  Term a = parse_term(std::string_view(cleaned).substr(0, split));
  Term b = parse_term(std::string_view(cleaned).substr(split));
  if (a.imaginary == b.imaginary)
    throw ParseError("scalar '" + cleaned + "' must combine one real and one imaginary term");
  if (a.imaginary) std::swap(a, b);
  return Scalar(a.value, b.value);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

} // namespace lietriple
