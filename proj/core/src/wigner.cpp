#include "molsym/wigner.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <memory>
#include <mutex>
#include <vector>

namespace molsym {

namespace {

CMatrix raising(int l) {
  const int n = 2 * l + 1;
  CMatrix jp = CMatrix::Zero(n, n);
  for (int m = -l; m < l; ++m) jp(m + 1 + l, m + l) = std::sqrt(double(l * (l + 1) - m * (m + 1)));
  return jp;
}

// Eigenvectors of L_y, one column per eigenvalue m = -l..l.
class LyEigenCache {
 public:
  std::shared_ptr<const CMatrix> get(int l) {
    std::lock_guard lock(mu_);
    if (l >= int(cache_.size())) cache_.resize(l + 1);
    if (!cache_[l]) cache_[l] = std::make_shared<const CMatrix>(compute(l));
    return cache_[l];
  }

 private:
  static CMatrix compute(int l) {
    const CMatrix ly = generators(l).Ly;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(ly);
    // eigenvalues come back ascending and are exactly -l..l
    return es.eigenvectors();
  }
  std::mutex mu_;
  std::vector<std::shared_ptr<const CMatrix>> cache_;
};

LyEigenCache& ly_cache() {
  static LyEigenCache c;
  return c;
}

double log_fact(int n) { return std::lgamma(double(n) + 1); }

}  // namespace

MomentumGenerators generators(int l) {
  check_ell(l);
  const int n = 2 * l + 1;
  const CMatrix jp = raising(l);
  const CMatrix jm = jp.adjoint();
  MomentumGenerators g;
  g.l = l;
  g.Lx = (jp + jm) / 2.0;
  g.Ly = (jp - jm) / cplx(0, 2);
  g.Lz = CMatrix::Zero(n, n);
  for (int m = -l; m <= l; ++m) g.Lz(m + l, m + l) = m;
  return g;
}

Eigen::MatrixXd wigner_small_d(int l, double beta) {
  check_ell(l);
  const auto u = ly_cache().get(l);
  const int n = 2 * l + 1;
  CMatrix scaled = *u;
  for (int k = 0; k < n; ++k) scaled.col(k) *= std::polar(1.0, -(k - l) * beta);
  return (scaled * u->adjoint()).real();
}

Eigen::MatrixXd wigner_small_d_series(int l, double beta) {
  check_ell(l);
  const int n = 2 * l + 1;
  const double c = std::cos(beta / 2), s = std::sin(beta / 2);
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int mp = -l; mp <= l; ++mp) {
    for (int m = -l; m <= l; ++m) {
      const double pre = 0.5 * (log_fact(l + mp) + log_fact(l - mp) + log_fact(l + m) + log_fact(l - m));
      const int kmin = std::max(0, m - mp), kmax = std::min(l + m, l - mp);
      double sum = 0;
      for (int k = kmin; k <= kmax; ++k) {
        const int pc = 2 * l + m - mp - 2 * k, ps = 2 * k - m + mp;
        if ((pc > 0 && c == 0) || (ps > 0 && s == 0)) continue;
        const double lg = pre - log_fact(l + m - k) - log_fact(k) - log_fact(l - k - mp) - log_fact(k - m + mp);
        double mag = std::exp(lg);
        if (pc > 0) mag *= std::pow(std::abs(c), pc);
        if (ps > 0) mag *= std::pow(std::abs(s), ps);
        bool neg = ((k - m + mp) % 2 + 2) % 2 == 1;
        if (c < 0 && pc % 2 == 1) neg = !neg;
        if (s < 0 && ps % 2 == 1) neg = !neg;
        sum += neg ? -mag : mag;
      }
      d(mp + l, m + l) = sum;
    }
  }
  return d;
}

Eigen::MatrixXd wigner_small_d_exact(int l, double beta) {
  check_ell(l);
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  using Float = boost::multiprecision::cpp_bin_float_50;
  std::vector<cpp_int> fact(2 * l + 2, 1);
  for (int i = 1; i < int(fact.size()); ++i) fact[i] = fact[i - 1] * i;
  const Float half_beta = Float(beta) / 2;
  const Float c = cos(half_beta), s = sin(half_beta);
  const int n = 2 * l + 1;
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (int mp = -l; mp <= l; ++mp) {
    for (int m = -l; m <= l; ++m) {
      const cpp_int radicand = fact[l + mp] * fact[l - mp] * fact[l + m] * fact[l - m];
      const int kmin = std::max(0, m - mp), kmax = std::min(l + m, l - mp);
      Float sum = 0;
      for (int k = kmin; k <= kmax; ++k) {
        cpp_rational coef(cpp_int(1), fact[l + m - k] * fact[k] * fact[l - k - mp] * fact[k - m + mp]);
        if ((k - m + mp) % 2 != 0) coef = -coef;
        sum += Float(coef) * pow(c, 2 * l + m - mp - 2 * k) * pow(s, 2 * k - m + mp);
      }
      d(mp + l, m + l) = static_cast<double>(sum * sqrt(Float(radicand)));
    }
  }
  return d;
}

CMatrix wigner_D(int l, const Rotation& g) {
  check_ell(l);
  const EulerAngles e = g.euler();
  const Eigen::MatrixXd d = wigner_small_d(l, e.beta);
  const int n = 2 * l + 1;
  CMatrix out(n, n);
  for (int i = 0; i < n; ++i) {
    const cplx left = std::polar(1.0, -(i - l) * e.alpha);
    for (int j = 0; j < n; ++j) out(i, j) = left * d(i, j) * std::polar(1.0, -(j - l) * e.gamma);
  }
  return out;
}

double wigner_character(int l, double theta) {
  const double den = std::sin(theta / 2);
  if (std::abs(den) < 1e-12) return 2 * l + 1;
  return std::sin((l + 0.5) * theta) / den;
}

}  // namespace molsym
