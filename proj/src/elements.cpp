#include "qcpu/elements.hpp"

#include <algorithm>
#include <utility>

namespace qcpu {

struct Network::Node {
  NodeKind kind;
  std::optional<std::variant<Element, GroupedElement>> primitive;
  std::vector<Network> children;  // product children, or the single inner network
};

Element Element::rotator(Index m, Complex coeff) {
  if (m < 0) throw std::invalid_argument("Rotator: branch index must be nonnegative");
  return Element(ElementKind::kRotator, Branch{m, m}, coeff, 0);
}

Element Element::transitor(Index m, Index n, Complex coeff) {
  if (m < 0 || n < 0) throw std::invalid_argument("Transitor: branch index must be nonnegative");
  if (m == n) throw std::invalid_argument("Transitor requires m != n");
  return Element(ElementKind::kTransitor, Branch{m, n}, coeff, 0);
}

Element Element::connector() { return Element(ElementKind::kConnector, Branch{}, {}, 0); }

Element Element::co_connector() { return Element(ElementKind::kCoConnector, Branch{}, {}, 0); }

Element Element::drawer(int outcome) {
  if (outcome != 0 && outcome != 1)
    throw std::invalid_argument("Drawer: outcome must be 0 or 1");
  return Element(ElementKind::kDrawer, Branch{}, {}, outcome);
}

namespace {

void check_element_range(const Element& element, const RegisterSpec& spec) {
  if (element.kind() == ElementKind::kRotator || element.kind() == ElementKind::kTransitor) {
    if (element.max_index() >= spec.dim())
      throw std::invalid_argument("element branch index out of range for register");
  }
}

void check_grouped(const GroupedElement& grouped, const RegisterSpec& spec) {
  std::vector<Branch> all = grouped.branches;
  all.insert(all.end(), grouped.fixed_branches.begin(), grouped.fixed_branches.end());
  if (all.empty()) throw std::invalid_argument("grouped element needs at least one branch");
  for (const Branch& b : all)
    if (b.m < 0 || b.n < 0 || b.m >= spec.dim() || b.n >= spec.dim())
      throw std::invalid_argument("grouped element branch index out of range for register");
  auto key = [](const Branch& b) { return std::pair{b.m, b.n}; };
  std::sort(all.begin(), all.end(),
            [&](const Branch& a, const Branch& b) { return key(a) < key(b); });
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::invalid_argument("grouped element branches must be pairwise distinct");
}

}  // namespace

Network Network::primitive(const RegisterSpec& spec, const Element& element) {
  check_element_range(element, spec);
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::kPrimitive;
  node->primitive = element;
  return Network(spec, std::move(node));
}

Network Network::primitive(const RegisterSpec& spec, const GroupedElement& grouped) {
  check_grouped(grouped, spec);
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::kPrimitive;
  node->primitive = grouped;
  return Network(spec, std::move(node));
}

Network Network::product(const RegisterSpec& spec, std::vector<Network> children) {
  for (const Network& child : children) {
    if (!(child.spec() == spec))
      throw std::invalid_argument("product: children must share one register spec");
    if (child.kind() == NodeKind::kTwoRegister)
      throw std::invalid_argument("product: two-register networks cannot be nested");
  }
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::kProduct;
  node->children = std::move(children);
  return Network(spec, std::move(node));
}

Network Network::identity_plus(Network inner) {
  if (inner.kind() == NodeKind::kTwoRegister)
    throw std::invalid_argument("identity_plus: two-register networks cannot be nested");
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::kIdentityPlusWrap;
  RegisterSpec spec = inner.spec();
  node->children.push_back(std::move(inner));
  return Network(spec, std::move(node));
}

Network Network::two_register(Network inner) {
  if (inner.kind() == NodeKind::kTwoRegister)
    throw std::invalid_argument("two_register: two-register networks cannot be nested");
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::kTwoRegister;
  RegisterSpec spec = inner.spec();
  node->children.push_back(std::move(inner));
  return Network(spec, std::move(node));
}

Network::NodeKind Network::kind() const { return node_->kind; }

Index Network::dim() const {
  return kind() == NodeKind::kTwoRegister ? spec_.joint_dim() * spec_.dim()
                                          : spec_.joint_dim();
}

const std::variant<Element, GroupedElement>& Network::primitive_value() const {
  if (kind() != NodeKind::kPrimitive) throw std::logic_error("network node is not a primitive");
  return *node_->primitive;
}

const std::vector<Network>& Network::children() const {
  if (kind() != NodeKind::kProduct) throw std::logic_error("network node is not a product");
  return node_->children;
}

const Network& Network::inner() const {
  if (kind() != NodeKind::kIdentityPlusWrap && kind() != NodeKind::kTwoRegister)
    throw std::logic_error("network node has no inner network");
  return node_->children.front();
}

ComplexMatrix element_matrix(const Element& element, const RegisterSpec& spec) {
  check_element_range(element, spec);
  const Index n = spec.dim();
  const AncillaOps ancilla = ancilla_ops();
  switch (element.kind()) {
    case ElementKind::kRotator:
    case ElementKind::kTransitor: {
      ComplexMatrix out = ComplexMatrix::Identity(2 * n, 2 * n);
      out(2 * element.m() + 1, 2 * element.n()) += element.coeff();
      return out;
    }
    case ElementKind::kConnector:
      return kron(ComplexMatrix::Identity(n, n), ancilla.lower);
    case ElementKind::kCoConnector:
      return kron(ComplexMatrix::Identity(n, n), ancilla.raise);
    case ElementKind::kDrawer:
      return kron(ComplexMatrix::Identity(n, n),
                  element.outcome() == 0 ? ancilla.proj0 : ancilla.proj1);
  }
  throw std::logic_error("unreachable element kind");
}

ComplexMatrix element_matrix(const GroupedElement& grouped, const RegisterSpec& spec) {
  check_grouped(grouped, spec);
  const Index n = spec.dim();
  ComplexMatrix out = ComplexMatrix::Identity(2 * n, 2 * n);
  for (const Branch& b : grouped.branches) out(2 * b.m + 1, 2 * b.n) += grouped.shared_coeff;
  for (const Branch& b : grouped.fixed_branches) out(2 * b.m + 1, 2 * b.n) += Complex{1.0, 0.0};
  return out;
}

Network q_network(const ComplexMatrix& u, const RegisterSpec& spec) {
  if (u.rows() != spec.dim() || u.cols() != spec.dim())
    throw std::invalid_argument("q_network: matrix must be N x N for the register");
  std::vector<Network> factors;
  for (Index m = 0; m < u.rows(); ++m)
    for (Index n = 0; n < u.cols(); ++n) {
      const Complex entry = u(m, n);
      if (entry == Complex{0.0, 0.0}) continue;
      factors.push_back(Network::primitive(
          spec, m == n ? Element::rotator(m, entry) : Element::transitor(m, n, entry)));
    }
  return Network::product(spec, std::move(factors));
}

ComplexMatrix evaluate(const Network& net) {
  const Index joint = net.spec().joint_dim();
  switch (net.kind()) {
    case Network::NodeKind::kPrimitive:
      return std::visit([&](const auto& p) { return element_matrix(p, net.spec()); },
                        net.primitive_value());
    case Network::NodeKind::kProduct: {
      ComplexMatrix out = ComplexMatrix::Identity(joint, joint);
      ComplexMatrix scratch(joint, joint);
      for (const Network& child : net.children()) {
        scratch.noalias() = out * evaluate(child);
        out.swap(scratch);
      }
      return out;
    }
    case Network::NodeKind::kIdentityPlusWrap:
      return ComplexMatrix::Identity(joint, joint) + evaluate(net.inner());
    case Network::NodeKind::kTwoRegister:
      return kron(ComplexMatrix::Identity(net.spec().dim(), net.spec().dim()),
                  evaluate(net.inner()));
  }
  throw std::logic_error("unreachable node kind");
}

namespace {

// In-place action of one element on a joint-space block. Rotator/Transitor
// writes touch only odd (ancilla-1) entries and read only even ones, so the
// updates are order-free and alias-safe.
void apply_element_in_place(const Element& element, Eigen::Ref<ComplexVector> v) {
  const Index n = v.size() / 2;
  switch (element.kind()) {
    case ElementKind::kRotator:
    case ElementKind::kTransitor:
      v[2 * element.m() + 1] += element.coeff() * v[2 * element.n()];
      return;
    case ElementKind::kConnector:
      for (Index m = 0; m < n; ++m) {
        v[2 * m] = v[2 * m + 1];
        v[2 * m + 1] = Complex{0.0, 0.0};
      }
      return;
    case ElementKind::kCoConnector:
      for (Index m = 0; m < n; ++m) {
        v[2 * m + 1] = v[2 * m];
        v[2 * m] = Complex{0.0, 0.0};
      }
      return;
    case ElementKind::kDrawer: {
      const Index keep = element.outcome();
      for (Index m = 0; m < n; ++m) v[2 * m + (1 - keep)] = Complex{0.0, 0.0};
      return;
    }
  }
}

void apply_grouped_in_place(const GroupedElement& grouped, Eigen::Ref<ComplexVector> v) {
  for (const Branch& b : grouped.branches) v[2 * b.m + 1] += grouped.shared_coeff * v[2 * b.n];
  for (const Branch& b : grouped.fixed_branches) v[2 * b.m + 1] += v[2 * b.n];
}

void apply_in_place(const Network& net, Eigen::Ref<ComplexVector> v);

void apply_single_register(const Network& net, Eigen::Ref<ComplexVector> v) {
  switch (net.kind()) {
    case Network::NodeKind::kPrimitive:
      std::visit(
          [&](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, Element>)
              apply_element_in_place(p, v);
            else
              apply_grouped_in_place(p, v);
          },
          net.primitive_value());
      return;
    case Network::NodeKind::kProduct: {
      const auto& children = net.children();
      // Rightmost factor acts first.
      for (auto it = children.rbegin(); it != children.rend(); ++it) apply_in_place(*it, v);
      return;
    }
    case Network::NodeKind::kIdentityPlusWrap: {
      ComplexVector wrapped = v;
      apply_in_place(net.inner(), wrapped);
      v += wrapped;
      return;
    }
    case Network::NodeKind::kTwoRegister:
      throw std::logic_error("two-register node inside a single-register context");
  }
}

void apply_in_place(const Network& net, Eigen::Ref<ComplexVector> v) {
  if (net.kind() == Network::NodeKind::kTwoRegister) {
    const Index block = net.spec().joint_dim();
    for (Index i = 0; i < net.spec().dim(); ++i)
      apply_single_register(net.inner(), v.segment(i * block, block));
    return;
  }
  apply_single_register(net, v);
}

}  // namespace

ComplexVector apply(const Network& net, const ComplexVector& v) {
  if (v.size() != net.dim())
    throw std::invalid_argument("apply: state length does not match network dimension");
  ComplexVector out = v;
  apply_in_place(net, out);
  return out;
}

JointState apply(const Network& net, const JointState& s) {
  if (!(s.spec == net.spec()) || net.kind() == Network::NodeKind::kTwoRegister)
    throw std::invalid_argument("apply: joint state does not match network");
  return JointState(s.spec, apply(net, s.amplitudes));
}

namespace {

void flatten_into(const Network& net, std::vector<NetlistItem>& items) {
  switch (net.kind()) {
    case Network::NodeKind::kPrimitive:
      std::visit([&](const auto& p) { items.emplace_back(p); }, net.primitive_value());
      return;
    case Network::NodeKind::kProduct:
      for (const Network& child : net.children()) flatten_into(child, items);
      return;
    case Network::NodeKind::kIdentityPlusWrap:
      items.emplace_back(WrapBegin{});
      flatten_into(net.inner(), items);
      items.emplace_back(WrapEnd{});
      return;
    case Network::NodeKind::kTwoRegister:
      throw std::invalid_argument("flatten: two-register networks have no flat form");
  }
}

}  // namespace

Netlist flatten(const Network& net) {
  Netlist out{net.spec(), {}};
  flatten_into(net, out.items);
  return out;
}

Network to_network(const Netlist& netlist) {
  std::vector<std::vector<Network>> stack;
  stack.emplace_back();
  for (const NetlistItem& item : netlist.items) {
    if (std::holds_alternative<WrapBegin>(item)) {
      stack.emplace_back();
    } else if (std::holds_alternative<WrapEnd>(item)) {
      if (stack.size() < 2) throw std::invalid_argument("to_network: unbalanced wrap markers");
      Network wrapped = Network::identity_plus(
          Network::product(netlist.spec, std::move(stack.back())));
      stack.pop_back();
      stack.back().push_back(std::move(wrapped));
    } else if (const Element* e = std::get_if<Element>(&item)) {
      stack.back().push_back(Network::primitive(netlist.spec, *e));
    } else {
      stack.back().push_back(Network::primitive(netlist.spec, std::get<GroupedElement>(item)));
    }
  }
  if (stack.size() != 1) throw std::invalid_argument("to_network: unbalanced wrap markers");
  return Network::product(netlist.spec, std::move(stack.front()));
}

}  // namespace qcpu
