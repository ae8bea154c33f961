// Grounding of the basic elements in standard gates: the Pauli tensor
// decomposition of |m><n| and generalized exchange gates built from neighbor
// transpositions.

#pragma once

#include "qcpu/core.hpp"

#include <vector>

namespace qcpu {

/// Sign convention for Y. With kIPauliY, Y = i*sigma_y = [[0,1],[-1,0]] and
/// (X+Y)/2 = |0><1|, (X-Y)/2 = |1><0|. The alternative reading swaps the two
/// off-diagonal factors; both are exposed, one must be chosen and recorded.
enum class YConvention { kIPauliY, kMinusIPauliY };

ComplexMatrix pauli_x();
ComplexMatrix pauli_y(YConvention conv);
ComplexMatrix pauli_z();

/// One per-qubit 2x2 factor of the |m><n| decomposition, selected by the
/// qubit's bits alpha (of m) and beta (of n).
struct PauliFactor {
  int alpha = 0;
  int beta = 0;
  ComplexMatrix matrix;  // (I+Z)/2, (I-Z)/2, (X+Y)/2 or (X-Y)/2
};

struct PauliDecomposition {
  YConvention convention;
  std::vector<PauliFactor> factors;  // index i = qubit i
  ComplexMatrix matrix;              // the evaluated k-fold tensor product
};

/// |m><n| as a tensor product of Pauli combinations, one factor per qubit.
/// Under kIPauliY the evaluated matrix equals |m><n| exactly.
PauliDecomposition pauli_decomposition(Index m, Index n, const RegisterSpec& spec,
                                       YConvention conv = YConvention::kIPauliY);

/// Permutation gate mapping |n> to |m>, realized as a product of neighbor
/// transpositions. Unitary with integer entries; for |m - n| = 1 it is also
/// Hermitian and involutive.
struct ExchangeGate {
  RegisterSpec spec;
  Index m = 0;
  Index n = 0;
  /// Neighbor transpositions in application order (first entry acts first);
  /// value j means the swap of |j> and |j+1>.
  std::vector<Index> transpositions;
  ComplexMatrix matrix;
};

/// The neighbor transposition E(m, m+1).
ExchangeGate exchange_neighbor(Index m, const RegisterSpec& spec);

/// General E(m, n) as the ordered neighbor-transposition product; E(m, m) is
/// the identity. Satisfies E(m,n)|n> = |m> and <m|E(m,n) = <n|.
ExchangeGate exchange(Index m, Index n, const RegisterSpec& spec);

/// Direct construction of the same permutation (cyclic on the index interval
/// between n and m, identity elsewhere), used to cross-check `exchange`.
ComplexMatrix exchange_permutation_matrix(Index m, Index n, const RegisterSpec& spec);

/// |m><n| as exchange-then-measure: E(m,n)|n><n| (left form) and
/// |m><m|E(m,n) (right form). Both equal |m><n|.
struct KetbraFactorization {
  ComplexMatrix left_form;
  ComplexMatrix right_form;
};

KetbraFactorization ketbra_via_exchange(Index m, Index n, const RegisterSpec& spec);

}  // namespace qcpu
