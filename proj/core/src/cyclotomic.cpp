#include "molsym/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "molsym/common.hpp"

namespace molsym {

namespace {

using Poly = std::vector<long long>;

// Reduction data for Q(zeta_n): powers[k] = x^k mod Phi_n, dense, length phi.
struct Field {
  int n = 1;
  int phi = 1;
  std::vector<Poly> powers;
};

std::mutex g_field_mu;
std::map<int, std::unique_ptr<Field>> g_fields;
std::map<int, Poly> g_cyclo;

Poly poly_div_exact(Poly num, const Poly& den) {
  const int dn = int(den.size()) - 1;
  Poly q(num.size() - dn, 0);
  for (int i = int(num.size()) - 1; i >= dn; --i) {
    const long long c = num[i] / den[dn];
    q[i - dn] = c;
    for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

const Poly& cyclo_locked(int n) {
  auto it = g_cyclo.find(n);
  if (it != g_cyclo.end()) return it->second;
  Poly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div_exact(p, cyclo_locked(d));
  return g_cyclo.emplace(n, std::move(p)).first->second;
}

const Field& field_locked(int n);

const Field& field(int n) {
  thread_local const Field* last = nullptr;
  if (last && last->n == n) return *last;
  std::lock_guard lock(g_field_mu);
  last = &field_locked(n);
  return *last;
}

const Field& field_locked(int n) {
  auto it = g_fields.find(n);
  if (it != g_fields.end()) return *it->second;
  auto f = std::make_unique<Field>();
  f->n = n;
  const Poly& c = cyclo_locked(n);
  f->phi = int(c.size()) - 1;
  const int count = std::max(n, 2 * f->phi - 1);
  Poly cur(f->phi, 0);
  cur[0] = 1;
  f->powers.reserve(count);
  for (int k = 0; k < count; ++k) {
    f->powers.push_back(cur);
    // multiply by x, then fold the x^phi term using the monic polynomial
    const long long top = cur[f->phi - 1];
    for (int j = f->phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    for (int j = 0; j < f->phi; ++j) cur[j] -= top * c[j];
  }
  return *g_fields.emplace(n, std::move(f)).first->second;
}

int mod(long long a, int n) {
  long long r = a % n;
  return int(r < 0 ? r + n : r);
}

// Accumulate coeff * zeta^k into a dense power-basis vector.
void add_power(std::vector<BigInt>& out, const Field& f, int k, const BigInt& coeff) {
  const Poly& p = f.powers[k];
  for (int j = 0; j < f.phi; ++j)
    if (p[j] != 0) out[j] += coeff * p[j];
}

}  // namespace

int euler_phi(int n) {
  int r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

const std::vector<long long>& cyclotomic_polynomial(int n) {
  if (n < 1) throw InvalidArgument("cyclotomic order must be positive");
  std::lock_guard lock(g_field_mu);
  return cyclo_locked(n);
}

Cyclotomic::Cyclotomic(long long v) : n_(1), num_{BigInt(v)}, den_(1) {}
Cyclotomic::Cyclotomic(const BigInt& v) : n_(1), num_{v}, den_(1) {}
Cyclotomic::Cyclotomic(const Rational& v)
    : n_(1), num_{boost::multiprecision::numerator(v)}, den_(boost::multiprecision::denominator(v)) {}

Cyclotomic::Cyclotomic(int n, std::vector<BigInt> num, BigInt den) : n_(n), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void Cyclotomic::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  BigInt g = den_;
  for (const auto& c : num_) {
    if (c != 0) g = boost::multiprecision::gcd(g, c);
    if (g == 1) return;
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  if (g > 1) {
    for (auto& c : num_) c /= g;
    den_ /= g;
  }
}

Cyclotomic Cyclotomic::root(int n, long long k) {
  if (n < 1) throw InvalidArgument("root of unity order must be positive");
  const Field& f = field(n);
  const Poly& p = f.powers[mod(k, n)];
  std::vector<BigInt> num(p.begin(), p.end());
  return {n, std::move(num), BigInt(1)};
}

Cyclotomic Cyclotomic::lifted(int m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw InvalidArgument("cyclotomic lift to a non-multiple order");
  const Field& src = field(n_);
  const Field& dst = field(m);
  const int step = m / n_;
  std::vector<BigInt> out(dst.phi);
  for (int k = 0; k < src.phi; ++k)
    if (num_[k] != 0) add_power(out, dst, k * step, num_[k]);
  return {m, std::move(out), den_};
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t k = 1; k < num_.size(); ++k)
    if (num_[k] != 0) return false;
  return true;
}

Rational Cyclotomic::rational() const {
  if (!is_rational()) throw ComputationError("cyclotomic value " + str() + " is not rational");
  return Rational(num_[0], den_);
}

Rational Cyclotomic::coefficient(int k) const {
  if (k < 0 || k >= int(num_.size())) return Rational(0);
  return Rational(num_[k], den_);
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::galois(long long a) const {
  if (std::gcd(mod(a, n_), n_) != 1 && n_ > 1)
    throw InvalidArgument("galois exponent must be coprime to the field order");
  const Field& f = field(n_);
  std::vector<BigInt> out(f.phi);
  for (int k = 0; k < f.phi; ++k)
    if (num_[k] != 0) add_power(out, f, mod(a * k, n_), num_[k]);
  return {n_, std::move(out), den_};
}

std::complex<double> Cyclotomic::to_complex() const {
  // BigInt -> long double keeps ~19 digits; enough for 1e-14 relative.
  long double re = 0, im = 0;
  for (int k = 0; k < int(num_.size()); ++k) {
    if (num_[k] == 0) continue;
    const long double c = num_[k].convert_to<long double>();
    const long double t = 2.0L * 3.14159265358979323846264338327950288L * k / n_;
    re += c * std::cos(t);
    im += c * std::sin(t);
  }
  const long double d = den_.convert_to<long double>();
  return {double(re / d), double(im / d)};
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < int(num_.size()); ++k) {
    if (num_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << num_[k];
    if (k > 0) os << "*z" << n_ << "^" << k;
  }
  if (first) os << "0";
  if (den_ != 1) {
    std::string body = os.str();
    return "(" + body + ")/" + den_.str();
  }
  return os.str();
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.n_ != n_) {
    const int m = std::lcm(n_, o.n_);
    *this = lifted(m);
    return *this += o.lifted(m);
  }
  if (den_ == o.den_) {
    for (std::size_t k = 0; k < num_.size(); ++k) num_[k] += o.num_[k];
  } else {
    for (std::size_t k = 0; k < num_.size(); ++k) num_[k] = num_[k] * o.den_ + o.num_[k] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.n_ != n_) {
    const int m = std::lcm(n_, o.n_);
    *this = lifted(m);
    return *this *= o.lifted(m);
  }
  const Field& f = field(n_);
  std::vector<BigInt> wide(2 * f.phi - 1);
  for (int i = 0; i < f.phi; ++i) {
    if (num_[i] == 0) continue;
    for (int j = 0; j < f.phi; ++j)
      if (o.num_[j] != 0) wide[i + j] += num_[i] * o.num_[j];
  }
  std::vector<BigInt> out(wide.begin(), wide.begin() + f.phi);
  for (int k = f.phi; k < int(wide.size()); ++k)
    if (wide[k] != 0) add_power(out, f, k, wide[k]);
  num_ = std::move(out);
  den_ *= o.den_;
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : num_) c *= boost::multiprecision::numerator(r);
  den_ *= boost::multiprecision::denominator(r);
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Rational& r) {
  if (r == 0) throw ComputationError("cyclotomic division by zero");
  return *this *= Rational(1) / r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) {
    const int m = std::lcm(a.n_, b.n_);
    return a.lifted(m) == b.lifted(m);
  }
  return a.den_ == b.den_ && a.num_ == b.num_;
}

}  // namespace molsym
