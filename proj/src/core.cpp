#include "qcpu/core.hpp"

#include <cmath>
#include <numbers>

namespace qcpu {

ComplexVector basis_ket(Index m, Index dim) {
  if (m < 0 || m >= dim) throw std::invalid_argument("basis_ket: index out of range");
  ComplexVector v = ComplexVector::Zero(dim);
  v[m] = Complex{1.0, 0.0};
  return v;
}

ComplexMatrix ketbra(Index m, Index n, Index dim) {
  if (m < 0 || m >= dim || n < 0 || n >= dim)
    throw std::invalid_argument("ketbra: index out of range");
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  out(m, n) = Complex{1.0, 0.0};
  return out;
}

AncillaOps ancilla_ops() {
  AncillaOps ops;
  ops.lower = ketbra(0, 1, 2);
  ops.raise = ketbra(1, 0, 2);
  ops.proj0 = ketbra(0, 0, 2);
  ops.proj1 = ketbra(1, 1, 2);
  return ops;
}

JointState::JointState(RegisterSpec s, ComplexVector amps)
    : spec(s), amplitudes(std::move(amps)) {
  if (amplitudes.size() != spec.joint_dim())
    throw std::invalid_argument("JointState: amplitude vector must have length 2N");
}

JointState JointState::from_register(const RegisterSpec& spec, const ComplexVector& psi,
                                     int ancilla_bit) {
  if (psi.size() != spec.dim())
    throw std::invalid_argument("JointState: register vector must have length N");
  if (ancilla_bit != 0 && ancilla_bit != 1)
    throw std::invalid_argument("JointState: ancilla bit must be 0 or 1");
  ComplexVector amps = ComplexVector::Zero(spec.joint_dim());
  for (Index m = 0; m < spec.dim(); ++m) amps[2 * m + ancilla_bit] = psi[m];
  return JointState(spec, std::move(amps));
}

JointState JointState::basis(const RegisterSpec& spec, Index m, int ancilla_bit) {
  return from_register(spec, basis_ket(m, spec.dim()), ancilla_bit);
}

ComplexMatrix dft_matrix(const RegisterSpec& spec, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("dft_matrix: sign must be +1 or -1");
  const Index n = spec.dim();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexMatrix f(n, n);
  for (Index row = 0; row < n; ++row)
    for (Index col = 0; col < n; ++col) {
      const double phase = sign * 2.0 * std::numbers::pi *
                           static_cast<double>(row * col) / static_cast<double>(n);
      f(row, col) = scale * Complex{std::cos(phase), std::sin(phase)};
    }
  return f;
}

}  // namespace qcpu
