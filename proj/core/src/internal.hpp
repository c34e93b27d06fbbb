#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "molsym/group.hpp"

namespace molsym::detail {

// Fills irreps (matrices, numeric copies, characters) for a group whose
// elements, exact rotations, table and classes are already set.
std::vector<Irrep> build_irreps(const FiniteGroup& g);

// Exact constants.
Cyclotomic exact_cos(int n, int k);  // cos(2 pi k / n)
Cyclotomic exact_sin(int n, int k);  // sin(2 pi k / n)
Cyclotomic golden_ratio();           // (1 + sqrt 5) / 2

ExactMatrix exact_rz(int n, int k);  // Rz(2 pi k / n)
ExactMatrix quaternion_matrix(const Cyclotomic& w, const Cyclotomic& x, const Cyclotomic& y, const Cyclotomic& z);

// Permutation of `points` (up to sign if `lines`) induced by rotation r.
std::vector<int> induced_permutation(const Rotation& r, const std::vector<Eigen::Vector3d>& points, bool lines,
                                     double tol = 1e-6);

int permutation_sign(const std::vector<int>& perm);
int cycle_count(const std::vector<int>& perm);

// Runs body(i) for i in [0, n) on up to thread_count() threads. The first
// exception thrown by any task is rethrown after all workers join.
template <class F>
void parallel_for(int n, F&& body) {
  const int workers = std::min(n, thread_count());
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex mu;
  auto run = [&] {
    for (int i; (i = next.fetch_add(1)) < n;) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace molsym::detail
