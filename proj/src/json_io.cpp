#include "sofic/json_io.hpp"

#include <sstream>

namespace sofic {

using nlohmann::json;

namespace {

json fraction_json(const Fraction& f) { return f.str(); }

Word parse_letters(const std::vector<std::string>& alphabet,
                   const std::string& text) {
  Word word;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t best = alphabet.size();
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if (alphabet[i].size() > best_len &&
          text.compare(pos, alphabet[i].size(), alphabet[i]) == 0) {
        best = i;
        best_len = alphabet[i].size();
      }
    }
    if (best == alphabet.size()) {
      throw ParseError("cannot parse word '" + text + "'");
    }
    word.push_back(static_cast<uint32_t>(best));
    pos += best_len;
  }
  return word;
}

std::string render_word(const std::vector<std::string>& alphabet,
                        const Word& word) {
  std::string out;
  for (uint32_t letter : word) out += alphabet[letter];
  return out;
}

}  // namespace

json graph_to_json(const LabeledGraph& g) {
  json j;
  j["labels"] = g.labels();
  j["vertices"] = g.vertices();
  json edges = json::array();
  for (const auto& [u, l, v] : g.edge_triples()) {
    edges.push_back(json::array({u, l, v}));
  }
  j["edges"] = std::move(edges);
  return j;
}

LabeledGraph graph_from_json(const json& j) {
  try {
    std::vector<std::string> labels =
        j.at("labels").get<std::vector<std::string>>();
    std::vector<std::string> vertices =
        j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::array<std::string, 3>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) {
        throw ParseError("graph edge must be a [source,label,target] triple");
      }
      edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(),
                       e[2].get<std::string>()});
    }
    return LabeledGraph(std::move(labels), std::move(vertices), edges);
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph json: ") + e.what());
  }
}

json handle_to_json(const MonoidHandle& handle) {
  json j;
  switch (handle.kind()) {
    case MonoidKind::naturals:
      j["kind"] = "naturals";
      break;
    case MonoidKind::bicyclic:
      j["kind"] = "bicyclic";
      break;
    case MonoidKind::free_monoid:
      j["kind"] = "free";
      j["alphabet"] = handle.generator_labels();
      break;
    case MonoidKind::free_commutative:
      j["kind"] = "free_commutative";
      j["alphabet"] = handle.generator_labels();
      break;
    case MonoidKind::finite: {
      j["kind"] = "finite";
      j["table"] = handle.finite_monoid().table();
      j["identity"] = handle.finite_monoid().identity();
      j["generators"] = handle.finite_generators();
      j["labels"] = handle.generator_labels();
      break;
    }
    case MonoidKind::rewriting: {
      j["kind"] = "rewriting";
      j["alphabet"] = handle.generator_labels();
      json rules = json::array();
      for (const auto& rule : handle.rewrite_system().rules()) {
        rules.push_back(json::array(
            {render_word(handle.generator_labels(), rule.lhs),
             render_word(handle.generator_labels(), rule.rhs)}));
      }
      j["rules"] = std::move(rules);
      break;
    }
  }
  if (handle.is_reversed()) j["reversed"] = true;
  return j;
}

MonoidHandle handle_from_json(const json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    MonoidHandle handle = [&]() {
      if (kind == "naturals") return MonoidHandle::naturals();
      if (kind == "bicyclic") return MonoidHandle::bicyclic();
      if (kind == "free") {
        return MonoidHandle::free_monoid(
            j.at("alphabet").get<std::vector<std::string>>());
      }
      if (kind == "free_commutative") {
        return MonoidHandle::free_commutative(
            j.at("alphabet").get<std::vector<std::string>>());
      }
      if (kind == "finite") {
        auto table = j.at("table").get<std::vector<std::vector<uint32_t>>>();
        auto identity = j.at("identity").get<uint32_t>();
        std::vector<uint32_t> generators;
        std::vector<std::string> labels;
        if (j.contains("generators")) {
          generators = j.at("generators").get<std::vector<uint32_t>>();
        }
        if (j.contains("labels")) {
          labels = j.at("labels").get<std::vector<std::string>>();
        }
        return MonoidHandle::finite(
            finite_from_table(std::move(table), identity),
            std::move(generators), std::move(labels));
      }
      if (kind == "rewriting") {
        auto alphabet = j.at("alphabet").get<std::vector<std::string>>();
        std::vector<RewriteSystem::Rule> rules;
        for (const auto& r : j.at("rules")) {
          if (!r.is_array() || r.size() != 2) {
            throw ParseError("rewrite rule must be a [lhs,rhs] pair");
          }
          rules.push_back({parse_letters(alphabet, r[0].get<std::string>()),
                           parse_letters(alphabet, r[1].get<std::string>())});
        }
        return MonoidHandle::rewriting(
            alphabet, RewriteSystem(alphabet.size(), std::move(rules)));
      }
      throw ParseError("unknown monoid kind '" + kind + "'");
    }();
    if (j.value("reversed", false)) handle = opposite(handle);
    return handle;
  } catch (const json::exception& e) {
    throw ParseError(std::string("monoid json: ") + e.what());
  }
}

json approx_to_json(const ApproxMap& phi) {
  json j;
  j["x_size"] = phi.x_size();
  j["convention"] = to_string(phi.convention());
  json assignments = json::object();
  for (const auto& [element, value] : phi.assignments()) {
    assignments[to_string(element)] = value.images();
  }
  j["assignments"] = std::move(assignments);
  return j;
}

ApproxMap approx_from_json(const json& j, const MonoidHandle& handle) {
  try {
    const std::size_t x_size = j.at("x_size").get<std::size_t>();
    const std::string conv = j.at("convention").get<std::string>();
    if (conv != "standard" && conv != "diagrammatic") {
      throw ParseError("unknown convention '" + conv + "'");
    }
    std::map<Element, Transformation> assignments;
    for (const auto& [key, value] : j.at("assignments").items()) {
      assignments.emplace(parse_element(handle, key),
                          Transformation(value.get<std::vector<uint32_t>>()));
    }
    return ApproxMap(handle, x_size,
                     conv == "standard" ? Convention::standard
                                        : Convention::diagrammatic,
                     std::move(assignments));
  } catch (const json::exception& e) {
    throw ParseError(std::string("approx json: ") + e.what());
  }
}

json report_to_json(const DefectReport& report) {
  json j;
  json k = json::array();
  for (const Element& e : report.k) k.push_back(to_string(e));
  j["k"] = std::move(k);
  j["max_product_defect"] = fraction_json(report.max_product_defect);
  if (report.max_product_pair) {
    j["max_product_pair"] =
        json::array({to_string(report.max_product_pair->first),
                     to_string(report.max_product_pair->second)});
  }
  j["identity_defect"] = fraction_json(report.identity_defect);
  j["min_injectivity"] = fraction_json(report.min_injectivity);
  if (report.min_injectivity_pair) {
    j["min_injectivity_pair"] =
        json::array({to_string(report.min_injectivity_pair->first),
                     to_string(report.min_injectivity_pair->second)});
  }
  return j;
}

json weiss_to_json(const WeissReport& report) {
  json j;
  j["r"] = report.radius;
  j["delta"] = fraction_json(report.delta);
  j["vertex_count"] = report.vertex_count;
  j["good_count"] = report.good.size();
  j["good_vertices"] = report.good;
  j["ratio"] = fraction_json(report.ratio);
  j["pass"] = report.pass;
  return j;
}

json halving_to_json(const HalvingReport& report) {
  json j;
  j["r"] = report.radius;
  j["vertex_count"] = report.vertex_count;
  j["good_count"] = report.good.size();
  j["good_vertices"] = report.good;
  j["p_successor"] = report.successor;
  j["pass"] = report.pass;
  j["issues"] = report.issues;
  return j;
}

json certificate_to_json(const Certificate& cert) {
  json j;
  j["h"] = cert.h.images();
  j["f"] = cert.f.images();
  j["g"] = cert.g.images();
  j["k"] = cert.k.images();
  j["convention"] = to_string(cert.convention);
  j["epsilon"] = fraction_json(cert.epsilon);
  j["d_h_id"] = fraction_json(cert.d_h_id);
  j["d_h_fg"] = fraction_json(cert.d_h_fg);
  j["d_fg_id"] = fraction_json(cert.d_fg_id);
  j["d_gf_id"] = fraction_json(cert.d_gf_id);
  j["d_k_gf"] = fraction_json(cert.d_k_gf);
  j["d_k_h"] = fraction_json(cert.d_k_h);
  j["lemma_equality"] = cert.lemma_equality;
  j["triangle_bounds_hold"] = cert.triangle_bounds_hold;
  j["morphism_defect"] = fraction_json(cert.morphism_defect);
  j["chain_bound"] = fraction_json(cert.chain_bound);
  j["constraints_hold"] = cert.constraints_hold;
  j["injectivity_met"] = cert.injectivity_met;
  j["conclusion"] = cert.conclusion;
  return j;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const LabeledGraph& g, const std::string* center) {
  std::ostringstream os;
  os << "digraph sofic {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (const std::string& v : g.vertices()) {
    os << "  \"" << dot_escape(v) << "\"";
    if (center != nullptr && v == *center) os << " [peripheries=2]";
    os << ";\n";
  }
  for (const auto& [u, l, v] : g.edge_triples()) {
    os << "  \"" << dot_escape(u) << "\" -> \"" << dot_escape(v)
       << "\" [label=\"" << dot_escape(l) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const PointedBall& ball) {
  return to_dot(ball.graph, &ball.center);
}

}  // namespace sofic
