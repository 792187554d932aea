#include "pn/json_io.hpp"

namespace pn {

using nlohmann::ordered_json;

ordered_json graph_to_json(const ApproxGraph& g) {
  ordered_json j;
  j["n"] = g.n;
  j["level"] = g.level;
  auto& verts = j["vertices"] = ordered_json::array();
  for (const VertexAddress& v : g.vertices) verts.push_back(format_address(v, g.n));
  auto& edges = j["edges"] = ordered_json::array();
  for (auto [a, b] : g.edges) edges.push_back(ordered_json::array({a, b}));
  auto& boundary = j["boundary"] = ordered_json::array();
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    if (g.boundary_mask[i]) boundary.push_back(i);
  return j;
}

ordered_json trace_to_json(const DecimationTrace& t, std::optional<double> limit) {
  ordered_json j;
  j["n"] = t.n;
  j["seed_level"] = t.seed_level;
  j["seed_lambda"] = t.seed_lambda;
  j["signs"] = signs_to_string(t.signs);
  j["lambdas"] = t.lambdas;
  j["renormalized"] = t.renormalized;
  if (limit)
    j["limit"] = *limit;
  else
    j["limit"] = nullptr;
  j["valid"] = t.valid;
  if (t.forbidden_hit)
    j["forbidden_hit"] = *t.forbidden_hit;
  else
    j["forbidden_hit"] = nullptr;
  return j;
}

ordered_json spectrum_to_json(const SpectrumReport& rep) {
  ordered_json j;
  j["n"] = rep.n;
  j["level"] = rep.level;
  auto& cl = j["clusters"] = ordered_json::array();
  for (const SpectrumCluster& c : rep.clusters) {
    ordered_json e;
    e["lambda"] = c.lambda;
    e["multiplicity"] = c.multiplicity;
    e["tag"] = tag_name(c.tag);
    if (c.parent_lambda)
      e["parent_lambda"] = *c.parent_lambda;
    else
      e["parent_lambda"] = nullptr;
    e["residual"] = c.residual;
    cl.push_back(std::move(e));
  }
  return j;
}

}  // namespace pn
