#include "molsym/group.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "internal.hpp"

namespace molsym {

// ---------------------------------------------------------------- ExactMatrix

ExactMatrix ExactMatrix::identity(int dim) {
  ExactMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  ExactMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) {
      const Cyclotomic& aik = (*this)(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < dim_; ++j) {
        const Cyclotomic& bkj = o(k, j);
        if (!bkj.is_zero()) r(i, j) += aik * bkj;
      }
    }
  return r;
}

ExactMatrix ExactMatrix::operator*(const Cyclotomic& s) const {
  ExactMatrix r = *this;
  for (auto& v : r.a_) v *= s;
  return r;
}

Cyclotomic ExactMatrix::trace() const {
  Cyclotomic t;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r(i, j) = (*this)(j, i).conj();
  return r;
}

ExactMatrix ExactMatrix::galois(long long a) const {
  ExactMatrix r = *this;
  for (auto& v : r.a_) v = v.galois(a);
  return r;
}

ExactMatrix ExactMatrix::lifted(int n) const {
  ExactMatrix r = *this;
  for (auto& v : r.a_) v = v.lifted(n);
  return r;
}

bool ExactMatrix::is_identity() const { return *this == identity(dim_); }

CMatrix ExactMatrix::to_complex() const {
  CMatrix m(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j).to_complex();
  return m;
}

// ---------------------------------------------------------------- Irrep

bool Irrep::matches(const std::string& name) const {
  if (name == label) return true;
  return std::find(aliases.begin(), aliases.end(), name) != aliases.end();
}

bool Irrep::is_trivial() const {
  if (dim != 1) return false;
  for (const auto& c : characters)
    if (!(c == Cyclotomic(1))) return false;
  return true;
}

// ---------------------------------------------------------------- CayleyTable

bool CayleyTable::is_abelian() const {
  for (int a = 0; a < size; ++a)
    for (int b = a + 1; b < size; ++b)
      if ((*this)(a, b) != (*this)(b, a)) return false;
  return true;
}

CayleyTable CayleyTable::from(int size, const std::function<int(int, int)>& product) {
  CayleyTable t;
  t.size = size;
  t.mul.resize(std::size_t(size) * size);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      const int c = product(a, b);
      if (c < 0) throw ComputationError("group is not closed under multiplication");
      t.mul[std::size_t(a) * size + b] = c;
    }
  t.inv.assign(size, -1);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b)
      if (t(a, b) == 0) t.inv[a] = b;
  t.orders.assign(size, 0);
  for (int a = 0; a < size; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = t(x, a);
      if (++k > size) throw ComputationError("element order exceeds group order");
    }
    t.orders[a] = k;
  }
  return t;
}

// ---------------------------------------------------------------- exact constants

namespace detail {

Cyclotomic exact_cos(int n, int k) { return (Cyclotomic::root(n, k) + Cyclotomic::root(n, -k)) * Rational(1, 2); }

Cyclotomic exact_sin(int n, int k) {
  // (z - 1/z) / (2i) = -i (z - 1/z) / 2
  return (Cyclotomic::root(n, k) - Cyclotomic::root(n, -k)) * Cyclotomic::root(4, 3) * Rational(1, 2);
}

Cyclotomic golden_ratio() { return Cyclotomic(1) + Cyclotomic::root(5, 1) + Cyclotomic::root(5, 4); }

ExactMatrix exact_rz(int n, int k) {
  ExactMatrix m(3);
  const Cyclotomic c = exact_cos(n, k), s = exact_sin(n, k);
  m(0, 0) = c;
  m(0, 1) = -s;
  m(1, 0) = s;
  m(1, 1) = c;
  m(2, 2) = 1;
  return m;
}

ExactMatrix quaternion_matrix(const Cyclotomic& w, const Cyclotomic& x, const Cyclotomic& y, const Cyclotomic& z) {
  ExactMatrix m(3);
  const Cyclotomic one(1), two(2);
  m(0, 0) = one - two * (y * y + z * z);
  m(0, 1) = two * (x * y - w * z);
  m(0, 2) = two * (x * z + w * y);
  m(1, 0) = two * (x * y + w * z);
  m(1, 1) = one - two * (x * x + z * z);
  m(1, 2) = two * (y * z - w * x);
  m(2, 0) = two * (x * z - w * y);
  m(2, 1) = two * (y * z + w * x);
  m(2, 2) = one - two * (x * x + y * y);
  return m;
}

std::vector<int> induced_permutation(const Rotation& r, const std::vector<Eigen::Vector3d>& points, bool lines,
                                     double tol) {
  const Eigen::Matrix3d m = r.matrix();
  std::vector<int> perm(points.size(), -1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Eigen::Vector3d p = m * points[i];
    for (std::size_t j = 0; j < points.size(); ++j) {
      if ((p - points[j]).norm() < tol || (lines && (p + points[j]).norm() < tol)) {
        perm[i] = int(j);
        break;
      }
    }
    if (perm[i] < 0) throw ComputationError("rotation does not map the point set onto itself");
  }
  return perm;
}

int cycle_count(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = int(i); !seen[j]; j = perm[j]) seen[j] = 1;
  }
  return cycles;
}

int permutation_sign(const std::vector<int>& perm) { return (int(perm.size()) - cycle_count(perm)) % 2 == 0 ? 1 : -1; }

}  // namespace detail

// ---------------------------------------------------------------- construction

namespace {

int parse_index(const std::string& s) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), ::isdigit))
    throw InvalidArgument("malformed group index '" + s + "'");
  return std::stoi(s);
}

}  // namespace

struct GroupBuilder {
  static Rotation to_rotation(const ExactMatrix& m) {
    Eigen::Matrix3d r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = m(i, j).to_complex().real();
    return Rotation::from_matrix(r);
  }

  static void add(FiniteGroup& g, const ExactMatrix& m) {
    g.exact_.push_back(m);
    g.elements_.push_back(to_rotation(m));
  }

  // Breadth-first closure over exact generator matrices.
  static void close(FiniteGroup& g, const std::vector<ExactMatrix>& gens) {
    add(g, ExactMatrix::identity(3));
    for (std::size_t i = 0; i < g.exact_.size(); ++i) {
      for (const auto& gen : gens) {
        const ExactMatrix y = g.exact_[i] * gen;
        if (g.find(to_rotation(y)) < 0) add(g, y);
      }
      if (g.exact_.size() > 60) throw ComputationError("generator closure exceeded 60 elements");
    }
    for (const auto& gen : gens) g.generators_.push_back(g.find(to_rotation(gen)));
  }

  static void finish(FiniteGroup& g) {
    const int n = int(g.elements_.size());
    g.table_ = CayleyTable::from(n, [&](int a, int b) { return g.find(g.elements_[a] * g.elements_[b]); });
    int l = 4;
    for (int o : g.table_.orders) l = std::lcm(l, o);
    g.cyc_order_ = l;
    for (auto& m : g.exact_) m = m.lifted(l);

    g.angle_steps_.resize(n);
    for (int a = 0; a < n; ++a) {
      const double theta = g.elements_[a].angle();
      const int steps = int(std::lround(theta * l / kTwoPi));
      if (std::abs(theta - kTwoPi * steps / l) > 1e-9)
        throw ComputationError("rotation angle is not a multiple of 2 pi / " + std::to_string(l));
      g.angle_steps_[a] = steps;
    }

    g.class_of_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      if (g.class_of_[a] >= 0) continue;
      std::vector<int> cls;
      for (int h = 0; h < n; ++h) cls.push_back(g.mul(g.mul(h, a), g.inverse(h)));
      std::sort(cls.begin(), cls.end());
      cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
      for (int c : cls) g.class_of_[c] = int(g.classes_.size());
      g.classes_.push_back(std::move(cls));
    }

    g.irreps_ = detail::build_irreps(g);
    int dim_sq = 0;
    for (const auto& r : g.irreps_) dim_sq += r.dim * r.dim;
    if (dim_sq != n || g.irreps_.size() != g.classes_.size())
      throw ComputationError("irrep catalog of " + g.name_ + " is incomplete");
  }

  static GroupPtr make(const std::string& name) {
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->name_ = name;
    const ExactMatrix cyc3 = [] {
      ExactMatrix m(3);
      m(1, 0) = 1;
      m(2, 1) = 1;
      m(0, 2) = 1;
      return m;
    }();
    if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'D')) {
      const int N = parse_index(name.substr(1));
      const bool dihedral = name[0] == 'D';
      if (N < 1 || (dihedral && N < 2)) throw InvalidArgument("unsupported group " + name);
      if (N > 1000) throw InvalidArgument("group order too large: " + name);
      g->kind_ = dihedral ? GroupKind::Dihedral : GroupKind::Cyclic;
      g->param_ = N;
      for (int k = 0; k < N; ++k) GroupBuilder::add(*g, detail::exact_rz(N, k));
      if (dihedral) {
        ExactMatrix flip(3);
        flip(0, 0) = -1;
        flip(1, 1) = 1;
        flip(2, 2) = -1;
        for (int k = 0; k < N; ++k) GroupBuilder::add(*g, detail::exact_rz(N, k) * flip);
        g->generators_ = {N > 1 ? 1 : 0, N};
      } else {
        g->generators_ = {N > 1 ? 1 : 0};
      }
    } else if (name == "T" || name == "O") {
      g->kind_ = name == "T" ? GroupKind::Tetrahedral : GroupKind::Octahedral;
      const ExactMatrix second = name == "T" ? detail::exact_rz(2, 1) : detail::exact_rz(4, 1);
      GroupBuilder::close(*g, {cyc3, second});
    } else if (name == "I") {
      g->kind_ = GroupKind::Icosahedral;
      const Cyclotomic phi = detail::golden_ratio();
      const Cyclotomic half(Rational(1, 2));
      const ExactMatrix five = detail::quaternion_matrix(phi * half, half, Cyclotomic(0), (phi - Cyclotomic(1)) * half);
      GroupBuilder::close(*g, {cyc3, detail::exact_rz(2, 1), five});
    } else {
      throw InvalidArgument("unknown group '" + name + "'");
    }
    GroupBuilder::finish(*g);
    return g;
  }
};

GroupPtr build_group(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, GroupPtr> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
  }
  GroupPtr g = GroupBuilder::make(name);
  std::lock_guard lock(mu);
  return cache.emplace(name, g).first->second;
}

int FiniteGroup::find(const Rotation& r, double tol) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].approx(r, tol)) return int(i);
  return -1;
}

int FiniteGroup::irrep_index(const std::string& label) const {
  for (std::size_t r = 0; r < irreps_.size(); ++r)
    if (irreps_[r].matches(label)) return int(r);
  std::string known;
  for (const auto& r : irreps_) known += (known.empty() ? "" : ", ") + r.label;
  throw InvalidArgument("group " + name_ + " has no irrep '" + label + "' (known: " + known + ")");
}

int FiniteGroup::find_irrep(const std::vector<Cyclotomic>& chars) const {
  for (std::size_t r = 0; r < irreps_.size(); ++r)
    if (irreps_[r].characters == chars) return int(r);
  return -1;
}

Rational character_inner(const FiniteGroup& g, const std::vector<Cyclotomic>& chi1,
                         const std::vector<Cyclotomic>& chi2) {
  Cyclotomic sum;
  for (std::size_t c = 0; c < g.classes().size(); ++c)
    sum += chi1[c] * chi2[c].conj() * Cyclotomic(static_cast<long long>(g.classes()[c].size()));
  return sum.rational() / g.order();
}

std::vector<Cyclotomic> tensor_character(const FiniteGroup& g, int r1, int r2) {
  std::vector<Cyclotomic> chi(g.classes().size());
  for (std::size_t c = 0; c < chi.size(); ++c) chi[c] = g.irrep(r1).characters[c] * g.irrep(r2).characters[c];
  return chi;
}

std::map<int, int> tensor_decompose(const FiniteGroup& g, int r1, int r2) {
  const auto chi = tensor_character(g, r1, r2);
  std::map<int, int> out;
  for (int r = 0; r < int(g.irreps().size()); ++r) {
    const Rational m = character_inner(g, chi, g.irrep(r).characters);
    if (boost::multiprecision::denominator(m) != 1) throw ComputationError("non-integral tensor multiplicity");
    if (m != 0) out[r] = static_cast<int>(boost::multiprecision::numerator(m));
  }
  return out;
}

// ---------------------------------------------------------------- quotients

namespace {

std::map<int, int> order_histogram(const std::vector<int>& orders) {
  std::map<int, int> h;
  for (int o : orders) ++h[o];
  return h;
}

std::map<int, int> cyclic_histogram(int m) {
  std::map<int, int> h;
  for (int k = 0; k < m; ++k) ++h[m / std::gcd(k, m)];
  return h;
}

}  // namespace

QuotientInfo subgroup_quotient(const CayleyTable& t, const std::vector<int>& kernel) {
  std::vector<char> in(t.size, 0);
  for (int k : kernel) {
    if (k < 0 || k >= t.size) throw InvalidArgument("kernel element out of range");
    in[k] = 1;
  }
  if (!in[0]) throw InvalidArgument("kernel must contain the identity");
  for (int a : kernel)
    for (int b : kernel)
      if (!in[t(a, b)]) throw InvalidArgument("kernel is not a subgroup");
  for (int g = 0; g < t.size; ++g)
    for (int k : kernel)
      if (!in[t(t(g, k), t.inv[g])]) throw InvalidArgument("kernel is not a normal subgroup");

  // coset of g = smallest element of gK
  std::vector<int> coset(t.size, -1), reps;
  for (int g = 0; g < t.size; ++g) {
    if (coset[g] >= 0) continue;
    const int id = int(reps.size());
    reps.push_back(g);
    for (int k : kernel) coset[t(g, k)] = id;
  }
  const int q = int(reps.size());
  const CayleyTable qt = CayleyTable::from(q, [&](int a, int b) { return coset[t(reps[a], reps[b])]; });

  QuotientInfo info;
  info.order = q;
  info.abelian = qt.is_abelian();
  const auto hist = order_histogram(qt.orders);
  if (hist == cyclic_histogram(q)) {
    info.label = "C" + std::to_string(q);
    return info;
  }
  if (q % 2 == 0 && q >= 4) {
    auto dih = cyclic_histogram(q / 2);
    dih[2] += q / 2;
    if (hist == dih) {
      info.label = "D" + std::to_string(q / 2);
      return info;
    }
  }
  const std::map<int, int> tet{{1, 1}, {2, 3}, {3, 8}};
  const std::map<int, int> oct{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
  const std::map<int, int> ico{{1, 1}, {2, 15}, {3, 20}, {5, 24}};
  if (hist == tet)
    info.label = "T";
  else if (hist == oct)
    info.label = "O";
  else if (hist == ico)
    info.label = "I";
  else
    info.label = "order-" + std::to_string(q);
  return info;
}

QuotientInfo subgroup_quotient(const FiniteGroup& g, const std::vector<int>& kernel) {
  return subgroup_quotient(g.table(), kernel);
}

}  // namespace molsym
