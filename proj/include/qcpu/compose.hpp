// Composition laws for networks realizing I + U (x) raise:
// concatenation adds the transformations, Connector-chaining multiplies them,
// and the two-register embedding turns the chain into full multiplication.

#pragma once

#include "qcpu/elements.hpp"

namespace qcpu {

/// Sum law: the plain concatenation of networks realizing U_1 ... U_r
/// realizes U_1 + ... + U_r.
Network compose_sum(const std::vector<Network>& nets);

/// Product law: Connector-chained composition. For inputs realizing
/// U_1 ... U_r (list order = matrix order, U_1 leftmost) the result is
///   I + CoConnector . [Connector Q(U_1)] ... [Connector Q(U_r)]
///       . Connector . CoConnector
/// and realizes the product U_1 U_2 ... U_r.
Network compose_product(const std::vector<Network>& nets);

/// Two-register form of the product law: the same chain without the identity
/// addition, embedded as I_N (x) chain. Applied to psi_in (x) (psi (x) |0>_A)
/// it leaves the input register alone and puts U_1...U_r psi (x) |1>_A in the
/// output register.
Network two_register_compose(const std::vector<Network>& nets);

/// Network realizing the inverse of q_network(u): same factors with negated
/// coefficients. evaluate(inverse) * evaluate(q_network(u)) = I exactly.
Network inverse_network(const ComplexMatrix& u, const RegisterSpec& spec);

/// Result of projecting the ancilla onto one outcome.
struct PostSelection {
  bool possible = false;     // false: the outcome has zero amplitude
  double probability = 0.0;  // squared-norm fraction of the joint state
  ComplexVector state;       // normalized register vector; empty if impossible
};

/// Drawer measurement: project the joint state onto ancilla = outcome and
/// renormalize. Probabilities of the two outcomes sum to one.
PostSelection drawer_postselect(const JointState& s, int outcome);

}  // namespace qcpu
