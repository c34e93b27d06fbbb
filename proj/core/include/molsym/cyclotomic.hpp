#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>
#include <vector>

namespace molsym {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact element of the cyclotomic field Q(zeta_n).
///
/// Stored in the power basis zeta^0 .. zeta^(phi(n)-1), i.e. as the remainder
/// modulo the n-th cyclotomic polynomial, with integer numerators over one
/// positive common denominator in lowest terms. The representation is
/// canonical, so equality is structural. Mixed-order operands are lifted to
/// the lcm of their orders.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(0) {}
  Cyclotomic(long long v);  // NOLINT(google-explicit-constructor)
  explicit Cyclotomic(const BigInt& v);
  explicit Cyclotomic(const Rational& v);

  /// zeta_n^k with zeta_n = exp(2 pi i / n).
  static Cyclotomic root(int n, long long k);

  int order() const { return n_; }
  /// Same value viewed in Q(zeta_m); m must be a multiple of order().
  Cyclotomic lifted(int m) const;

  bool is_zero() const;
  bool is_rational() const;
  /// Throws ComputationError unless is_rational().
  Rational rational() const;
  /// Coefficient of zeta^k in the power basis.
  Rational coefficient(int k) const;

  Cyclotomic conj() const;
  /// Field automorphism zeta -> zeta^a; gcd(a, order) must be 1.
  Cyclotomic galois(long long a) const;

  std::complex<double> to_complex() const;
  std::string str() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  Cyclotomic& operator/=(const Rational& r);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator/(Cyclotomic a, const Rational& r) { return a /= r; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(int n, std::vector<BigInt> num, BigInt den);
  void normalize();

  int n_ = 1;
  std::vector<BigInt> num_;
  BigInt den_ = 1;
};

/// Euler totient.
int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long long>& cyclotomic_polynomial(int n);

}  // namespace molsym
