#include "galois5/affine.hpp"

#include <numeric>

namespace galois5 {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
  return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}

long long Rational::as_integer() const {
  if (den != 1) throw non_integral_error("value " + str() + " is not an integer");
  return num;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

AffineForm AffineForm::make(Rational c, Rational kg, std::array<Rational, 6> kn) {
  AffineForm f;
  f.c_ = c;
  f.g_ = kg;
  f.n_ = kn;
  return f;
}

AffineForm AffineForm::constant(Rational c) { return make(c, 0, {}); }
AffineForm AffineForm::genus(Rational coeff) { return make(0, coeff, {}); }

AffineForm AffineForm::count(int slot, Rational coeff) {
  AffineForm f;
  f.n_[slot] = coeff;
  return f;
}

AffineForm AffineForm::operator+(const AffineForm& o) const {
  AffineForm f;
  f.c_ = c_ + o.c_;
  f.g_ = g_ + o.g_;
  for (int i = 0; i < 6; ++i) f.n_[i] = n_[i] + o.n_[i];
  return f;
}

AffineForm AffineForm::operator-(const AffineForm& o) const {
  return *this + (o * Rational(-1));
}

AffineForm AffineForm::operator*(const Rational& s) const {
  AffineForm f;
  f.c_ = c_ * s;
  f.g_ = g_ * s;
  for (int i = 0; i < 6; ++i) f.n_[i] = n_[i] * s;
  return f;
}

bool AffineForm::is_zero() const {
  if (!c_.is_zero() || !g_.is_zero()) return false;
  for (const auto& k : n_)
    if (!k.is_zero()) return false;
  return true;
}

Rational AffineForm::eval(Rational g, const TypeCounts& counts) const {
  Rational v = c_ + g_ * g;
  for (int i = 0; i < 6; ++i) v = v + n_[i] * Rational(counts[i]);
  return v;
}

long long AffineForm::eval_int(long long g, const TypeCounts& counts) const {
  return eval(Rational(g), counts).as_integer();
}

AffineForm AffineForm::restrict_counts(const TypeCounts& counts) const {
  AffineForm f;
  f.g_ = g_;
  f.c_ = c_;
  for (int i = 0; i < 6; ++i) f.c_ = f.c_ + n_[i] * Rational(counts[i]);
  return f;
}

std::string AffineForm::str() const {
  std::string s = c_.str();
  auto term = [&s](const Rational& k, const std::string& var) {
    if (k.is_zero()) return;
    Rational a = k.num < 0 ? -k : k;
    s += k.num < 0 ? " - " : " + ";
    s += a.str() + "*" + var;
  };
  term(g_, "g");
  for (int i = 0; i < 6; ++i) term(n_[i], "n" + std::to_string(i + 1));
  return s;
}

}  // namespace galois5
