#include "qcpu/gates.hpp"

namespace qcpu {

ComplexMatrix pauli_x() {
  ComplexMatrix x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

ComplexMatrix pauli_y(YConvention conv) {
  ComplexMatrix y(2, 2);
  if (conv == YConvention::kIPauliY)
    y << 0, 1, -1, 0;
  else
    y << 0, -1, 1, 0;
  return y;
}

ComplexMatrix pauli_z() {
  ComplexMatrix z(2, 2);
  z << 1, 0, 0, -1;
  return z;
}

PauliDecomposition pauli_decomposition(Index m, Index n, const RegisterSpec& spec,
                                       YConvention conv) {
  if (m < 0 || n < 0 || m >= spec.dim() || n >= spec.dim())
    throw std::invalid_argument("pauli_decomposition: index out of range");

  const ComplexMatrix ident = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix x = pauli_x();
  const ComplexMatrix y = pauli_y(conv);
  const ComplexMatrix z = pauli_z();

  PauliDecomposition out;
  out.convention = conv;
  for (int i = 0; i < spec.qubits(); ++i) {
    PauliFactor factor;
    factor.alpha = RegisterSpec::bit(m, i) ? 1 : 0;
    factor.beta = RegisterSpec::bit(n, i) ? 1 : 0;
    if (factor.alpha == 0 && factor.beta == 0)
      factor.matrix = (ident + z) / 2.0;
    else if (factor.alpha == 1 && factor.beta == 1)
      factor.matrix = (ident - z) / 2.0;
    else if (factor.alpha == 0 && factor.beta == 1)
      factor.matrix = (x + y) / 2.0;
    else
      factor.matrix = (x - y) / 2.0;
    out.factors.push_back(std::move(factor));
  }

  // Tensor order: qubit k-1 is the leftmost (slowest) factor, matching bit i
  // of the basis index.
  ComplexMatrix acc = out.factors.back().matrix;
  for (int i = spec.qubits() - 2; i >= 0; --i) acc = kron(acc, out.factors[i].matrix);
  out.matrix = std::move(acc);
  return out;
}

namespace {

ComplexMatrix neighbor_swap_matrix(Index m, const RegisterSpec& spec) {
  ComplexMatrix out = ComplexMatrix::Identity(spec.dim(), spec.dim());
  out(m, m) = 0;
  out(m + 1, m + 1) = 0;
  out(m, m + 1) = 1;
  out(m + 1, m) = 1;
  return out;
}

}  // namespace

ExchangeGate exchange_neighbor(Index m, const RegisterSpec& spec) {
  if (m < 0 || m + 1 >= spec.dim())
    throw std::invalid_argument("exchange_neighbor: pair (m, m+1) out of range");
  return ExchangeGate{spec, m, m + 1, {m}, neighbor_swap_matrix(m, spec)};
}

ExchangeGate exchange(Index m, Index n, const RegisterSpec& spec) {
  if (m < 0 || n < 0 || m >= spec.dim() || n >= spec.dim())
    throw std::invalid_argument("exchange: index out of range");

  ExchangeGate out{spec, m, n, {}, ComplexMatrix::Identity(spec.dim(), spec.dim())};
  // Later transpositions multiply on the left, so the first listed acts first.
  if (n < m)
    for (Index j = n; j < m; ++j) out.transpositions.push_back(j);
  else
    for (Index j = n; j > m; --j) out.transpositions.push_back(j - 1);
  for (Index j : out.transpositions)
    out.matrix = neighbor_swap_matrix(j, spec) * out.matrix;
  return out;
}

ComplexMatrix exchange_permutation_matrix(Index m, Index n, const RegisterSpec& spec) {
  if (m < 0 || n < 0 || m >= spec.dim() || n >= spec.dim())
    throw std::invalid_argument("exchange_permutation_matrix: index out of range");
  // Cycle on the closed interval between n and m: |n> -> |m>, every other
  // index in the interval shifts one place toward n.
  ComplexMatrix out = ComplexMatrix::Zero(spec.dim(), spec.dim());
  for (Index j = 0; j < spec.dim(); ++j) {
    Index image = j;
    if (j == n)
      image = m;
    else if (n < m && j > n && j <= m)
      image = j - 1;
    else if (n > m && j >= m && j < n)
      image = j + 1;
    out(image, j) = 1;
  }
  return out;
}

KetbraFactorization ketbra_via_exchange(Index m, Index n, const RegisterSpec& spec) {
  const ExchangeGate gate = exchange(m, n, spec);
  KetbraFactorization out;
  out.left_form = gate.matrix * ketbra(n, n, spec.dim());
  out.right_form = ketbra(m, m, spec.dim()) * gate.matrix;
  return out;
}

}  // namespace qcpu
