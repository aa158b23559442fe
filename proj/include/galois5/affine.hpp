#pragma once

// Exact rational-coefficient affine expressions in (g, n1,...,n6) — the
// shape of every genus, dimension and ramification-degree formula produced
// by the closure analysis.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "galois5/ram.hpp"

namespace galois5 {

struct non_integral_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n) {}
  Rational(long long n, long long d);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator-() const { return {-num, den}; }
  bool operator==(const Rational&) const = default;

  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }
  long long as_integer() const;  // throws non_integral_error
  std::string str() const;       // "5/2", "-4", "0"
};

class AffineForm {
public:
  AffineForm() = default;

  // c + kg*g + k1*n1 + ... + k6*n6
  static AffineForm make(Rational c, Rational kg, std::array<Rational, 6> kn);
  static AffineForm constant(Rational c);
  static AffineForm genus(Rational coeff);
  static AffineForm count(int slot, Rational coeff);

  AffineForm operator+(const AffineForm& o) const;
  AffineForm operator-(const AffineForm& o) const;
  AffineForm operator*(const Rational& s) const;
  bool operator==(const AffineForm&) const = default;

  Rational constant_term() const { return c_; }
  Rational genus_coeff() const { return g_; }
  Rational count_coeff(int slot) const { return n_[slot]; }
  bool is_zero() const;
  bool depends_only_on_counts() const { return g_.is_zero(); }

  Rational eval(Rational g, const TypeCounts& counts) const;
  long long eval_int(long long g, const TypeCounts& counts) const;  // exact or throws

  // substitute concrete branch counts, leaving a form in g alone
  AffineForm restrict_counts(const TypeCounts& counts) const;

  // "c + k_g*g + k_1*n1 + ... + k_6*n6", zero terms omitted, lowest terms
  std::string str() const;

private:
  Rational c_, g_;
  std::array<Rational, 6> n_{};
};

}  // namespace galois5
