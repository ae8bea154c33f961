#include "qcpu/compose.hpp"

#include <cmath>

namespace qcpu {

namespace {

RegisterSpec common_spec(const std::vector<Network>& nets, const char* who) {
  if (nets.empty()) throw std::invalid_argument(std::string(who) + ": empty network list");
  const RegisterSpec spec = nets.front().spec();
  for (const Network& net : nets) {
    if (!(net.spec() == spec))
      throw std::invalid_argument(std::string(who) + ": networks must share one register spec");
    if (net.kind() == Network::NodeKind::kTwoRegister)
      throw std::invalid_argument(std::string(who) + ": two-register networks cannot be chained");
  }
  return spec;
}

// CoConnector . [Connector net_1] ... [Connector net_r] . Connector . CoConnector
Network connector_chain(const std::vector<Network>& nets, const RegisterSpec& spec) {
  std::vector<Network> factors;
  factors.reserve(2 * nets.size() + 3);
  factors.push_back(Network::primitive(spec, Element::co_connector()));
  for (const Network& net : nets) {
    factors.push_back(Network::primitive(spec, Element::connector()));
    factors.push_back(net);
  }
  factors.push_back(Network::primitive(spec, Element::connector()));
  factors.push_back(Network::primitive(spec, Element::co_connector()));
  return Network::product(spec, std::move(factors));
}

}  // namespace

Network compose_sum(const std::vector<Network>& nets) {
  const RegisterSpec spec = common_spec(nets, "compose_sum");
  return Network::product(spec, nets);
}

Network compose_product(const std::vector<Network>& nets) {
  const RegisterSpec spec = common_spec(nets, "compose_product");
  return Network::identity_plus(connector_chain(nets, spec));
}

Network two_register_compose(const std::vector<Network>& nets) {
  const RegisterSpec spec = common_spec(nets, "two_register_compose");
  return Network::two_register(connector_chain(nets, spec));
}

Network inverse_network(const ComplexMatrix& u, const RegisterSpec& spec) {
  return q_network(-u, spec);
}

PostSelection drawer_postselect(const JointState& s, int outcome) {
  if (outcome != 0 && outcome != 1)
    throw std::invalid_argument("drawer_postselect: outcome must be 0 or 1");
  const double total = s.squared_norm();
  if (total == 0.0) throw std::invalid_argument("drawer_postselect: state is zero");

  const Index n = s.spec.dim();
  ComplexVector projected(n);
  for (Index m = 0; m < n; ++m) projected[m] = s.at(m, outcome);

  PostSelection result;
  const double part = projected.squaredNorm();
  result.probability = part / total;
  if (part == 0.0) return result;  // impossible outcome: probability 0, no state
  result.possible = true;
  result.state = projected / std::sqrt(part);
  return result;
}

}  // namespace qcpu
