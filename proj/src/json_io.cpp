#include "pfcirc/json_io.hpp"

#include <stdexcept>

namespace pfcirc {

using nlohmann::json;

json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  if (!j.is_string()) throw std::invalid_argument("scalar: expected a string");
  return Scalar::parse(j.get<std::string>());
}

json skew_to_json(const SkewMatrix& m) {
  json upper = json::array();
  for (int i = 0; i < m.size(); i++)
    for (int k = i + 1; k < m.size(); k++)
      if (!m.at(i, k).is_zero())
        upper.push_back({m.labels()[i], m.labels()[k], scalar_to_json(m.at(i, k))});
  return {{"labels", m.labels()}, {"upper", upper}};
}

SkewMatrix skew_from_json(const json& j) {
  std::vector<std::tuple<int, int, Scalar>> upper;
  for (const json& entry : j.at("upper")) {
    if (!entry.is_array() || entry.size() != 3)
      throw std::invalid_argument("skew matrix: upper entries are [i, j, scalar]");
    upper.emplace_back(entry[0].get<int>(), entry[1].get<int>(), scalar_from_json(entry[2]));
  }
  return SkewMatrix::from_upper(j.at("labels").get<std::vector<int>>(), upper);
}

json tensor_to_json(const QubitTensor& t) {
  std::string variance;
  for (Leg l : t.variance()) variance += l == Leg::Ket ? 'k' : 'b';
  json coeffs = json::object();
  for (uint32_t mask = 0; mask < t.coeff_count(); mask++)
    if (!t.coeff(mask).is_zero()) coeffs[std::to_string(mask)] = scalar_to_json(t.coeff(mask));
  return {{"arity", t.arity()}, {"variance", variance}, {"coeffs", coeffs}};
}

QubitTensor tensor_from_json(const json& j) {
  int arity = j.at("arity").get<int>();
  std::string variance = j.at("variance").get<std::string>();
  if (static_cast<int>(variance.size()) != arity)
    throw std::invalid_argument("tensor: variance length differs from arity");
  std::vector<Leg> legs;
  for (char c : variance) {
    if (c != 'k' && c != 'b') throw std::invalid_argument("tensor: variance is 'k'/'b' letters");
    legs.push_back(c == 'k' ? Leg::Ket : Leg::Bra);
  }
  QubitTensor t{std::move(legs)};
  for (const auto& [key, value] : j.at("coeffs").items()) {
    size_t pos = 0;
    unsigned long mask = std::stoul(key, &pos);
    if (pos != key.size() || mask >= t.coeff_count())
      throw std::invalid_argument("tensor: bad coefficient mask " + key);
    t.coeff(static_cast<uint32_t>(mask)) = scalar_from_json(value);
  }
  return t;
}

json circuit_to_json(const Circuit& c) {
  json vertices = json::array();
  for (int v = 0; v < c.vertex_count(); v++) {
    const CircuitVertex& vx = c.vertex(v);
    json jv = {{"side", vx.side == Side::Gate ? "gate" : "cogate"}, {"rotation", vx.rotation}};
    if (vx.legs_override) jv["legs"] = *vx.legs_override;
    if (vx.elem) jv["assignment"] = skew_to_json(*vx.elem);
    if (vx.general) jv["assignment"] = tensor_to_json(*vx.general);
    vertices.push_back(std::move(jv));
  }
  json edges = json::array();
  for (int e = 0; e < c.edge_count(); e++) edges.push_back({c.edge(e).first, c.edge(e).second});
  return {{"vertices", vertices}, {"edges", edges}};
}

Circuit circuit_from_json(const json& j) {
  Circuit c;
  const json& vertices = j.at("vertices");
  for (const json& jv : vertices) {
    std::string side = jv.at("side").get<std::string>();
    if (side != "gate" && side != "cogate")
      throw std::invalid_argument("circuit: side is 'gate' or 'cogate'");
    c.add_vertex(side == "gate" ? Side::Gate : Side::Cogate);
  }
  for (const json& je : j.at("edges")) {
    if (!je.is_array() || je.size() != 2)
      throw std::invalid_argument("circuit: edges are [u, v] pairs");
    c.add_edge(je[0].get<int>(), je[1].get<int>());
  }
  for (int v = 0; v < c.vertex_count(); v++) {
    const json& jv = vertices[v];
    if (jv.contains("rotation")) c.set_rotation(v, jv["rotation"].get<std::vector<int>>());
    if (jv.contains("legs")) c.set_legs(v, jv["legs"].get<std::vector<int>>());
    if (jv.contains("assignment")) {
      const json& a = jv["assignment"];
      if (a.contains("labels"))
        c.assign(v, skew_from_json(a));
      else
        c.assign(v, tensor_from_json(a));
    }
  }
  c.validate();
  return c;
}

json edge_order_to_json(const EdgeOrder& o) { return {{"labels", o.label_of_edge}}; }

EdgeOrder edge_order_from_json(const json& j) {
  return {j.at("labels").get<std::vector<int>>()};
}

}  // namespace pfcirc
