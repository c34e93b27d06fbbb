#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace molsym {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Bad user input: unknown group, index out of range, malformed selector.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation that could not be completed or failed an internal check.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest angular momentum any routine will accept. Default 128.
int ell_cap();
void set_ell_cap(int cap);

/// Throws InvalidArgument for l < 0 or l > ell_cap().
void check_ell(int l);

/// Worker threads for per-l parallel maps. Defaults to $MOLSYM_THREADS, else
/// the hardware concurrency.
int thread_count();
void set_thread_count(int n);

}  // namespace molsym
