#ifndef SOFIC_JSON_IO_HPP_
#define SOFIC_JSON_IO_HPP_

#include <string>

#include <json.hpp>

#include "sofic/approx.hpp"
#include "sofic/labeled_graph.hpp"
#include "sofic/monoid.hpp"

namespace sofic {

// Graph schema:
//   {"labels":["p","q"],"vertices":["v0",...],"edges":[["v0","p","v1"],...]}
nlohmann::json graph_to_json(const LabeledGraph& g);
LabeledGraph graph_from_json(const nlohmann::json& j);

// Handle schema:
//   {"kind":"bicyclic"} | {"kind":"naturals"}
//   {"kind":"free","alphabet":["a","b"]}
//   {"kind":"free_commutative","alphabet":["a","b"]}
//   {"kind":"finite","table":[[...]],"identity":0,
//    "generators":[...]?,"labels":[...]?}
//   {"kind":"rewriting","alphabet":["p","q"],"rules":[["pq",""]]}
nlohmann::json handle_to_json(const MonoidHandle& handle);
MonoidHandle handle_from_json(const nlohmann::json& j);

// Approximation schema (the handle travels separately):
//   {"x_size":3,"convention":"diagrammatic","assignments":{"qp":[0,0,2]}}
nlohmann::json approx_to_json(const ApproxMap& phi);
ApproxMap approx_from_json(const nlohmann::json& j,
                           const MonoidHandle& handle);

nlohmann::json report_to_json(const DefectReport& report);
nlohmann::json weiss_to_json(const WeissReport& report);
nlohmann::json halving_to_json(const HalvingReport& report);
nlohmann::json certificate_to_json(const Certificate& cert);

// Graphviz rendering; the center vertex, when given, is drawn with a double
// outline.
std::string to_dot(const LabeledGraph& g, const std::string* center = nullptr);
std::string to_dot(const PointedBall& ball);

}  // namespace sofic

#endif  // SOFIC_JSON_IO_HPP_
