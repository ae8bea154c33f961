// Core value types and dense linear-algebra helpers shared by every module:
// register geometry, the register-plus-ancilla joint space, the nilpotent
// ancilla operators, Kronecker products and tolerance-based comparison.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace qcpu {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Default max-abs tolerance for matrix/vector comparisons. All identities in
/// this library are algebraically exact; the slack covers rounding only.
inline constexpr double kDefaultTolerance = 1e-10;

/// Dense storage grows as 4^k; refuse register sizes beyond this by default.
inline constexpr int kDefaultMaxQubits = 10;

/// Geometry of a k-qubit register. Basis states are indexed by m in [0, 2^k);
/// qubit i is bit i of m, with qubit 0 the least significant bit.
class RegisterSpec {
 public:
  explicit RegisterSpec(int qubits, int max_qubits = kDefaultMaxQubits)
      : qubits_(qubits) {
    if (qubits < 1 || qubits > max_qubits)
      throw std::invalid_argument("RegisterSpec: qubit count out of range");
  }

  int qubits() const { return qubits_; }
  Index dim() const { return Index{1} << qubits_; }        // N = 2^k
  Index joint_dim() const { return dim() * 2; }            // register x ancilla

  /// Value of qubit `i` in basis state `m`.
  static bool bit(Index m, int i) { return (m >> i) & 1; }

  friend bool operator==(const RegisterSpec& a, const RegisterSpec& b) {
    return a.qubits_ == b.qubits_;
  }

 private:
  int qubits_;
};

/// Kronecker product with the row-major block convention:
/// out(i*rb + p, j*cb + q) = a(i, j) * b(p, q).
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename Eigen::ScalarBinaryOpTraits<typename DerivedA::Scalar,
                                                      typename DerivedB::Scalar>::ReturnType;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                            a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b.derived();
  return out;
}

/// Largest absolute entry of a - b. Shapes must match.
template <typename DerivedA, typename DerivedB>
double max_abs_diff(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  if (a.size() == 0) return 0.0;
  return (a.derived() - b.derived()).cwiseAbs().maxCoeff();
}

template <typename DerivedA, typename DerivedB>
bool approx_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                  double tol = kDefaultTolerance) {
  return a.rows() == b.rows() && a.cols() == b.cols() && max_abs_diff(a, b) <= tol;
}

/// Basis column vector |m> of the given dimension.
ComplexVector basis_ket(Index m, Index dim);

/// Single-entry matrix |m><n| of the given dimension.
ComplexMatrix ketbra(Index m, Index n, Index dim);

/// The 2x2 operators acting on the auxiliary qubit. `lower` and `raise` are
/// nilpotent and satisfy lower*raise + raise*lower = I exactly.
struct AncillaOps {
  ComplexMatrix lower;  // |0><1|
  ComplexMatrix raise;  // |1><0|
  ComplexMatrix proj0;  // |0><0|
  ComplexMatrix proj1;  // |1><1|
};

AncillaOps ancilla_ops();

/// Amplitude vector on the register x ancilla space. Joint index = 2m + a
/// where a is the ancilla bit, so the ancilla is the fastest-varying index.
/// The norm is in general not 1: networks here are deliberately non-unitary.
struct JointState {
  RegisterSpec spec;
  ComplexVector amplitudes;  // length 2N

  JointState(RegisterSpec s, ComplexVector amps);

  /// psi (length N) tensored with the ancilla basis state |a>.
  static JointState from_register(const RegisterSpec& spec, const ComplexVector& psi,
                                  int ancilla_bit = 0);

  /// |m> tensor |a>.
  static JointState basis(const RegisterSpec& spec, Index m, int ancilla_bit = 0);

  Complex& at(Index m, int ancilla_bit) { return amplitudes[2 * m + ancilla_bit]; }
  Complex at(Index m, int ancilla_bit) const { return amplitudes[2 * m + ancilla_bit]; }

  double squared_norm() const { return amplitudes.squaredNorm(); }
};

/// Discrete Fourier matrix F(m,n) = N^{-1/2} exp(sign * 2*pi*i * m*n / N).
/// Oracle for the Fourier-network acceptance checks; sign must be +1 or -1.
ComplexMatrix dft_matrix(const RegisterSpec& spec, int sign);

}  // namespace qcpu
