// Network primitives and the universal network builder.
//
// The primitives all act on the register x ancilla joint space:
//   Rotator(m, u)      I + u * |m><m| (x) raise     rotates one branch, ancilla 0 -> 1
//   Transitor(m, n, u) I + u * |m><n| (x) raise     moves amplitude between branches
//   Connector          I (x) lower                  chains successive computing steps
//   CoConnector        I (x) raise
//   Drawer(b)          I (x) |b><b|                 post-selection projector
//
// All Rotator/Transitor generators are nilpotent of order two, which makes
// the full-matrix builder q_network order-independent and exactly invertible.

#pragma once

#include "qcpu/core.hpp"

#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace qcpu {

enum class ElementKind { kRotator, kTransitor, kConnector, kCoConnector, kDrawer };

/// One basis-pair path of the quantum data flow: amplitude flows from |n> to |m>.
struct Branch {
  Index m = 0;
  Index n = 0;
  friend bool operator==(const Branch&, const Branch&) = default;
};

class Element {
 public:
  static Element rotator(Index m, Complex coeff);
  static Element transitor(Index m, Index n, Complex coeff);  // requires m != n
  static Element connector();
  static Element co_connector();
  static Element drawer(int outcome);  // outcome in {0, 1}

  ElementKind kind() const { return kind_; }
  Index m() const { return branch_.m; }
  Index n() const { return branch_.n; }
  Branch branch() const { return branch_; }
  Complex coeff() const { return coeff_; }
  int outcome() const { return outcome_; }

  /// Largest register index the element touches, for range validation.
  Index max_index() const { return branch_.m > branch_.n ? branch_.m : branch_.n; }

 private:
  Element(ElementKind kind, Branch branch, Complex coeff, int outcome)
      : kind_(kind), branch_(branch), coeff_(coeff), outcome_(outcome) {}

  ElementKind kind_;
  Branch branch_;   // rotator: m == n; connector/co-connector/drawer: unused
  Complex coeff_;
  int outcome_;
};

/// Several branches driven by a single shared coefficient, plus branches
/// frozen at coefficient 1. One free parameter regardless of branch count;
/// the branch generators annihilate each other, so the grouped matrix is
/// identity plus the plain sum over branches.
struct GroupedElement {
  std::vector<Branch> branches;        // carry shared_coeff
  Complex shared_coeff{1.0, 0.0};
  std::vector<Branch> fixed_branches;  // carry coefficient 1
};

/// Immutable expression tree over elements. Product children multiply in
/// matrix order: the leftmost child is applied last to states.
class Network {
 public:
  enum class NodeKind { kPrimitive, kProduct, kIdentityPlusWrap, kTwoRegister };

  static Network primitive(const RegisterSpec& spec, const Element& element);
  static Network primitive(const RegisterSpec& spec, const GroupedElement& grouped);
  /// Ordered product; an empty child list is the identity network.
  static Network product(const RegisterSpec& spec, std::vector<Network> children);
  /// I + inner, the shape produced by the chained product law.
  static Network identity_plus(Network inner);
  /// I_N (x) inner on the doubled input/output space.
  static Network two_register(Network inner);

  const RegisterSpec& spec() const { return spec_; }
  NodeKind kind() const;

  /// Dimension of the evaluated matrix: 2N, or 2N*N for a two-register node.
  Index dim() const;

  // Node accessors; only valid for the matching kind.
  const std::variant<Element, GroupedElement>& primitive_value() const;
  const std::vector<Network>& children() const;
  const Network& inner() const;

 private:
  struct Node;
  Network(RegisterSpec spec, std::shared_ptr<const Node> node)
      : spec_(spec), node_(std::move(node)) {}

  RegisterSpec spec_;
  std::shared_ptr<const Node> node_;
};

/// Dense 2N x 2N matrix of a single element.
ComplexMatrix element_matrix(const Element& element, const RegisterSpec& spec);
ComplexMatrix element_matrix(const GroupedElement& grouped, const RegisterSpec& spec);

/// The universal network for an N x N transformation: one Rotator or
/// Transitor per nonzero entry of u, emitted row-major. Exact zeros are
/// elided (their factor is exactly the identity). The evaluated matrix is
/// I + u (x) raise, independent of factor order.
Network q_network(const ComplexMatrix& u, const RegisterSpec& spec);

/// Ground-truth evaluation by dense matrix algebra, recursing over nodes.
ComplexMatrix evaluate(const Network& net);

/// Structured application of the network to an amplitude vector; never forms
/// a dense matrix. The vector length must equal net.dim().
ComplexVector apply(const Network& net, const ComplexVector& v);
JointState apply(const Network& net, const JointState& s);

/// Flat serialization of a network: primitives in product order with explicit
/// markers around identity-plus-wrapped bodies. Two-register nodes do not
/// flatten.
struct WrapBegin {
  friend bool operator==(const WrapBegin&, const WrapBegin&) = default;
};
struct WrapEnd {
  friend bool operator==(const WrapEnd&, const WrapEnd&) = default;
};
using NetlistItem = std::variant<Element, GroupedElement, WrapBegin, WrapEnd>;

struct Netlist {
  RegisterSpec spec;
  std::vector<NetlistItem> items;
};

Netlist flatten(const Network& net);
Network to_network(const Netlist& netlist);

}  // namespace qcpu
