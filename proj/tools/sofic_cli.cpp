// Command-line front end: builds monoid handles and labeled graphs from
// JSON or builtin names, runs the library operations, and emits JSON, DOT
// or text reports.
//
// Exit codes: 0 success / check passed, 1 check failed, 2 usage or input
// errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sofic/approx.hpp"
#include "sofic/json_io.hpp"
#include "sofic/search.hpp"

using nlohmann::json;
using namespace sofic;

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("ill-formed JSON in '" + path + "': " + e.what());
  }
}

bool file_exists(const std::string& path) {
  return static_cast<bool>(std::ifstream(path));
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

// Builtin names: bicyclic | naturals | map2 | free:<letters> |
// freecomm:<letters>; anything else is a JSON file path.
MonoidHandle resolve_monoid(const std::string& spec) {
  if (spec == "bicyclic") return MonoidHandle::bicyclic();
  if (spec == "naturals") return MonoidHandle::naturals();
  if (spec == "map2") {
    return MonoidHandle::finite(full_map_monoid(2, Convention::diagrammatic),
                                {2, 0}, {"a", "c0"});
  }
  if (spec.rfind("free:", 0) == 0) {
    std::vector<std::string> letters;
    for (char c : spec.substr(5)) letters.push_back(std::string(1, c));
    return MonoidHandle::free_monoid(letters);
  }
  if (spec.rfind("freecomm:", 0) == 0) {
    std::vector<std::string> letters;
    for (char c : spec.substr(9)) letters.push_back(std::string(1, c));
    return MonoidHandle::free_commutative(letters);
  }
  if (!file_exists(spec)) {
    throw ParseError("'" + spec +
                     "' is neither a builtin monoid nor a readable file");
  }
  return handle_from_json(read_json_file(spec));
}

// Builtin names: cycle:<n> | path:<n> | fan:<n> | schreier:<n> |
// cayley-ball:<monoid>:<r>; anything else is a JSON file path.
LabeledGraph resolve_graph(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() == 2) {
    const unsigned long n = std::stoul(parts[1]);
    if (parts[0] == "cycle") return cycle_graph(n);
    if (parts[0] == "path") return path_graph(n);
    if (parts[0] == "fan") return fan_graph(n);
    if (parts[0] == "schreier") {
      return schreier_graph(static_cast<unsigned>(n));
    }
  }
  if (parts.size() == 3 && parts[0] == "cayley-ball") {
    return cayley_ball_graph(resolve_monoid(parts[1]),
                             static_cast<unsigned>(std::stoul(parts[2])))
        .graph;
  }
  if (!file_exists(spec)) {
    throw ParseError("'" + spec +
                     "' is neither a builtin graph nor a readable file");
  }
  return graph_from_json(read_json_file(spec));
}

// Elements come either from a JSON array file or inline, comma separated.
std::vector<Element> resolve_elements(const MonoidHandle& handle,
                                      const std::string& spec) {
  std::vector<std::string> names;
  if (file_exists(spec)) {
    const json j = read_json_file(spec);
    if (!j.is_array()) throw ParseError("element file must be a JSON array");
    for (const auto& item : j) names.push_back(item.get<std::string>());
  } else {
    names = split(spec, ',');
  }
  std::vector<Element> out;
  for (const auto& name : names) out.push_back(parse_element(handle, name));
  return out;
}

Convention resolve_convention(const std::string& name) {
  if (name == "standard") return Convention::standard;
  if (name == "diagrammatic") return Convention::diagrammatic;
  throw ParseError("unknown convention '" + name + "'");
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void emit_graph(const LabeledGraph& g, const std::string& format,
                const std::string* center = nullptr) {
  if (format == "dot") {
    std::cout << to_dot(g, center);
  } else if (format == "text") {
    std::cout << g.vertex_count() << " vertices, " << g.edge_count()
              << " edges over labels";
    for (const auto& l : g.labels()) std::cout << " " << l;
    std::cout << "\n";
  } else {
    json j = graph_to_json(g);
    if (center != nullptr) j["center"] = *center;
    emit(j);
  }
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{
      "soficity toolkit: finite approximations of monoids, Cayley balls, "
      "Weiss checks and the bicyclic obstruction"};
  app.require_subcommand(1);

  std::string monoid_spec, graph_spec, k_spec, approx_spec;
  std::string format = "json";
  std::string delta_text = "0", epsilon_text = "0", alpha_text;
  std::string mode = "relaxed", convention_name = "standard", family;
  std::string omega_spec, semigroup_spec, approx2_spec, monoid2_spec;
  std::string sigma_csv;
  unsigned r = 0, jobs = 1, power = 1;
  std::size_t n = 1, budget = 0, steps = 200000, restarts = 20;
  uint64_t seed = 0;
  bool randomized = false, allow_non_cancellative = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json|dot|text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
  };

  auto* ball = app.add_subcommand("ball", "elements within r of the identity");
  ball->add_option("--monoid", monoid_spec)->required();
  ball->add_option("--r", r)->required();
  add_format(ball);

  auto* cayley =
      app.add_subcommand("cayley", "Cayley ball of a monoid as a graph");
  cayley->add_option("--monoid", monoid_spec)->required();
  cayley->add_option("--r", r)->required();
  add_format(cayley);

  auto* gen = app.add_subcommand("gen", "generate an example graph family");
  gen->add_option("--family", family, "fan|schreier|cycle|path")->required();
  gen->add_option("--n", n)->required();
  add_format(gen);

  auto* weiss = app.add_subcommand("weiss", "check |V(r)| >= (1-delta)|V|");
  weiss->add_option("--graph", graph_spec)->required();
  weiss->add_option("--monoid", monoid_spec)->required();
  weiss->add_option("--r", r)->required();
  weiss->add_option("--delta", delta_text)->required();
  weiss->add_option("--jobs", jobs);
  add_format(weiss);

  auto* good = app.add_subcommand(
      "good-vertices", "vertices whose r-ball matches the Cayley ball");
  good->add_option("--graph", graph_spec)->required();
  good->add_option("--monoid", monoid_spec)->required();
  good->add_option("--r", r)->required();
  good->add_option("--jobs", jobs);
  add_format(good);

  auto* g2m = app.add_subcommand(
      "bridge-g2m", "approximation from a graph that passes the Weiss check");
  g2m->add_option("--graph", graph_spec)->required();
  g2m->add_option("--monoid", monoid_spec)->required();
  g2m->add_option("--k", k_spec)->required();
  g2m->add_option("--epsilon", epsilon_text)->required();
  g2m->add_option("--jobs", jobs);
  add_format(g2m);

  auto* m2g = app.add_subcommand(
      "bridge-m2g", "graph whose edges follow a diagrammatic approximation");
  m2g->add_option("--approx", approx_spec)->required();
  m2g->add_option("--monoid", monoid_spec)->required();
  m2g->add_option("--sigma", sigma_csv, "comma-separated generator labels");
  m2g->add_flag("--allow-non-cancellative", allow_non_cancellative);
  add_format(m2g);

  auto* verify =
      app.add_subcommand("verify", "defect report of an approximation on K");
  verify->add_option("--approx", approx_spec)->required();
  verify->add_option("--monoid", monoid_spec)->required();
  verify->add_option("--k", k_spec)->required();
  verify->add_option("--epsilon", epsilon_text)->required();
  verify->add_option("--alpha", alpha_text,
                     "injectivity level, defaults to 1-epsilon");
  add_format(verify);

  auto* amplify =
      app.add_subcommand("amplify", "diagonal power of an approximation");
  amplify->add_option("--approx", approx_spec)->required();
  amplify->add_option("--monoid", monoid_spec)->required();
  amplify->add_option("--power", power)->required();
  add_format(amplify);

  auto* product = app.add_subcommand(
      "product", "combine approximations of two finite monoids");
  product->add_option("--approx", approx_spec)->required();
  product->add_option("--monoid", monoid_spec)->required();
  product->add_option("--approx2", approx2_spec)->required();
  product->add_option("--monoid2", monoid2_spec)->required();
  add_format(product);

  auto* adjoin = app.add_subcommand(
      "adjoin-id", "approximation of a semigroup with an identity adjoined");
  adjoin->add_option("--semigroup", semigroup_spec,
                     "JSON file {\"table\":[[...]]}")
      ->required();
  adjoin->add_option("--k", k_spec,
                     "comma-separated element indices (default: everything)");
  adjoin->add_option("--epsilon", epsilon_text)->required();
  add_format(adjoin);

  auto* certify = app.add_subcommand(
      "certify-bicyclic",
      "obstruction chain for candidate images of 1, p, q, qp");
  certify->add_option("--approx", approx_spec)->required();
  certify->add_option("--epsilon", epsilon_text)->required();
  certify->add_option("--convention", convention_name,
                      "standard|diagrammatic");
  add_format(certify);

  auto* estar = app.add_subcommand(
      "epsilon-star", "exhaustive minimum constraint violation on n points");
  estar->add_option("--n", n)->required();
  estar->add_option("--mode", mode)->check(CLI::IsMember({"relaxed", "full"}));
  add_format(estar);

  auto* search = app.add_subcommand(
      "search", "look for a (K,1-eps)-injective (K,eps)-morphism");
  search->add_option("--monoid", monoid_spec)->required();
  search->add_option("--k", k_spec)->required();
  search->add_option("--epsilon", epsilon_text)->required();
  search->add_option("--n", n)->required();
  search->add_option("--convention", convention_name);
  search->add_flag("--randomized", randomized);
  search->add_option("--seed", seed);
  search->add_option("--steps", steps);
  search->add_option("--restarts", restarts);
  search->add_option("--budget", budget);
  add_format(search);

  auto* halving = app.add_subcommand(
      "halving-check", "bicyclic |V(r)| <= |V|/2 obstruction");
  halving->add_option("--graph", graph_spec)->required();
  halving->add_option("--r", r)->required();
  halving->add_option("--jobs", jobs);
  add_format(halving);

  auto* folner = app.add_subcommand(
      "folner", "interior {s : sK inside Omega} of a finite set");
  folner->add_option("--monoid", monoid_spec)->required();
  folner->add_option("--omega", omega_spec)->required();
  folner->add_option("--k", k_spec)->required();
  folner->add_option("--delta", delta_text,
                     "also test |interior| >= (1-delta)|Omega|");
  add_format(folner);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (ball->parsed()) {
    const MonoidHandle handle = resolve_monoid(monoid_spec);
    const auto elements = elements_ball(handle, r);
    if (format == "text") {
      for (const auto& e : elements) std::cout << to_string(e) << "\n";
    } else {
      json j;
      j["monoid"] = handle_to_json(handle);
      j["r"] = r;
      j["size"] = elements.size();
      json names = json::array();
      for (const auto& e : elements) names.push_back(to_string(e));
      j["elements"] = std::move(names);
      emit(j);
    }
    return 0;
  }

  if (cayley->parsed()) {
    const PointedBall ballg =
        cayley_ball_graph(resolve_monoid(monoid_spec), r);
    emit_graph(ballg.graph, format, &ballg.center);
    return 0;
  }

  if (gen->parsed()) {
    LabeledGraph g = [&]() {
      if (family == "fan") return fan_graph(n);
      if (family == "schreier") {
        return schreier_graph(static_cast<unsigned>(n));
      }
      if (family == "cycle") return cycle_graph(n);
      if (family == "path") return path_graph(n);
      throw ParseError("unknown family '" + family + "'");
    }();
    emit_graph(g, format);
    return 0;
  }

  if (weiss->parsed()) {
    const WeissReport report =
        weiss_check(resolve_graph(graph_spec), resolve_monoid(monoid_spec), r,
                    Fraction::parse(delta_text), jobs);
    if (format == "text") {
      std::cout << (report.pass ? "pass" : "fail") << ": |V(" << r
                << ")| = " << report.good.size() << " of "
                << report.vertex_count << " (ratio " << report.ratio.str()
                << ", delta " << report.delta.str() << ")\n";
    } else {
      emit(weiss_to_json(report));
    }
    return report.pass ? 0 : 1;
  }

  if (good->parsed()) {
    const LabeledGraph g = resolve_graph(graph_spec);
    const auto vertices =
        good_vertex_set(g, resolve_monoid(monoid_spec), r, jobs);
    if (format == "text") {
      for (const auto& v : vertices) std::cout << v << "\n";
    } else {
      json j;
      j["r"] = r;
      j["vertex_count"] = g.vertex_count();
      j["good_count"] = vertices.size();
      j["good_vertices"] = vertices;
      emit(j);
    }
    return 0;
  }

  if (g2m->parsed()) {
    const MonoidHandle handle = resolve_monoid(monoid_spec);
    const Fraction eps = Fraction::parse(epsilon_text);
    const GraphMorphismResult result = graph_to_morphism(
        resolve_graph(graph_spec), handle, resolve_elements(handle, k_spec),
        eps, jobs);
    const bool pass = result.report.passes(eps, Fraction::one() - eps);
    json j;
    j["r0"] = result.r0;
    j["r"] = result.r;
    j["weiss"] = weiss_to_json(result.weiss);
    j["approx"] = approx_to_json(result.phi);
    j["report"] = report_to_json(result.report);
    j["pass"] = pass;
    emit(j);
    return pass ? 0 : 1;
  }

  if (m2g->parsed()) {
    const MonoidHandle handle = resolve_monoid(monoid_spec);
    const ApproxMap phi =
        approx_from_json(read_json_file(approx_spec), handle);
    std::vector<std::string> sigma;
    if (!sigma_csv.empty()) sigma = split(sigma_csv, ',');
    const LabeledGraph g =
        morphism_to_graph(phi, sigma, allow_non_cancellative);
    emit_graph(g, format);
    return 0;
  }

  if (verify->parsed()) {
    const MonoidHandle handle = resolve_monoid(monoid_spec);
    const ApproxMap phi =
        approx_from_json(read_json_file(approx_spec), handle);
    const Fraction eps = Fraction::parse(epsilon_text);
    const Fraction alpha = alpha_text.empty() ? Fraction::one() - eps
                                              : Fraction::parse(alpha_text);
    const DefectReport report =
        defect_report(phi, resolve_elements(handle, k_spec));
    json j;
    j["report"] = report_to_json(report);
    j["epsilon"] = eps.str();
    j["alpha"] = alpha.str();
    j["morphism"] = report.is_morphism(eps);
    j["injective"] = report.is_injective(alpha);
    j["pass"] = report.passes(eps, alpha);
    emit(j);
    return report.passes(eps, alpha) ? 0 : 1;
  }

  if (amplify->parsed()) {
    const MonoidHandle handle = resolve_monoid(monoid_spec);
    const ApproxMap phi =
        approx_from_json(read_json_file(approx_spec), handle);
    emit(approx_to_json(amplify_approx(phi, power)));
    return 0;
  }

  if (product->parsed()) {
    const MonoidHandle h1 = resolve_monoid(monoid_spec);
    const MonoidHandle h2 = resolve_monoid(monoid2_spec);
    const ApproxMap combined =
        product_approx(approx_from_json(read_json_file(approx_spec), h1),
                       approx_from_json(read_json_file(approx2_spec), h2));
    json j;
    j["monoid"] = handle_to_json(combined.handle());
    j["approx"] = approx_to_json(combined);
    emit(j);
    return 0;
  }

  if (adjoin->parsed()) {
    const json sj = read_json_file(semigroup_spec);
    const FiniteSemigroup s(
        sj.at("table").get<std::vector<std::vector<uint32_t>>>());
    std::vector<uint32_t> k;
    if (k_spec.empty()) {
      for (uint32_t i = 0; i <= s.size(); ++i) k.push_back(i);
    } else {
      for (const auto& part : split(k_spec, ',')) {
        k.push_back(static_cast<uint32_t>(std::stoul(part)));
      }
    }
    const Fraction eps = Fraction::parse(epsilon_text);
    const AdjoinIdentityApprox result = adjoin_identity_approx(s, k, eps);
    const bool pass = result.report.passes(eps, Fraction::one() - eps);
    json j;
    j["monoid"] = handle_to_json(result.phi.handle());
    j["y_size"] = result.y.size();
    j["z_size"] = result.z_size;
    j["x_size"] = result.phi.x_size();
    j["approx"] = approx_to_json(result.phi);
    j["report"] = report_to_json(result.report);
    j["pass"] = pass;
    emit(j);
    return pass ? 0 : 1;
  }

  if (certify->parsed()) {
    const MonoidHandle b = MonoidHandle::bicyclic();
    const ApproxMap phi = approx_from_json(read_json_file(approx_spec), b);
    const Certificate cert = bicyclic_chain_certificate(
        phi.image(b.identity()), phi.image(bicyclic_element(b, 0, 1)),
        phi.image(bicyclic_element(b, 1, 0)),
        phi.image(bicyclic_element(b, 1, 1)), Fraction::parse(epsilon_text),
        resolve_convention(convention_name));
    if (format == "text") {
      std::cout << cert.conclusion << "\n";
    } else {
      emit(certificate_to_json(cert));
    }
    // exit 0 when the candidate is refuted
    return cert.constraints_hold && cert.injectivity_met ? 1 : 0;
  }

  if (estar->parsed()) {
    const EpsilonStarResult result = epsilon_star_bicyclic(
        n, mode == "full" ? EpsilonStarMode::full : EpsilonStarMode::relaxed);
    if (format == "text") {
      std::cout << result.value.str() << "\n";
    } else {
      json j;
      j["n"] = n;
      j["mode"] = mode;
      j["value"] = result.value.str();
      if (result.witness) j["witness"] = approx_to_json(*result.witness);
      emit(j);
    }
    return 0;
  }

  if (search->parsed()) {
    const MonoidHandle handle = resolve_monoid(monoid_spec);
    const auto k = resolve_elements(handle, k_spec);
    const Fraction eps = Fraction::parse(epsilon_text);
    const Convention conv = resolve_convention(convention_name);
    SearchResult result;
    if (randomized) {
      if (search->count("--seed") == 0) {
        throw ParseError("--randomized requires an explicit --seed");
      }
      RandomSearchOptions options;
      options.seed = seed;
      options.max_steps = steps;
      options.restarts = restarts;
      result = randomized_search(handle, k, eps, n, conv, options);
    } else {
      result = exhaustive_search(handle, k, eps, n, conv,
                                 budget == 0 ? kDefaultSearchBudget : budget);
    }
    json j;
    j["status"] = to_string(result.status);
    j["examined"] = result.examined;
    if (result.phi) j["approx"] = approx_to_json(*result.phi);
    if (result.report) j["report"] = report_to_json(*result.report);
    emit(j);
    return result.status == SearchStatus::found ? 0 : 1;
  }

  if (halving->parsed()) {
    const HalvingReport report =
        bicyclic_halving_check(resolve_graph(graph_spec), r, jobs);
    if (format == "text") {
      std::cout << (report.pass ? "pass" : "fail") << ": |V(" << r
                << ")| = " << report.good.size() << " of "
                << report.vertex_count << "\n";
      for (const auto& issue : report.issues) std::cout << issue << "\n";
    } else {
      emit(halving_to_json(report));
    }
    return report.pass ? 0 : 1;
  }

  if (folner->parsed()) {
    const MonoidHandle handle = resolve_monoid(monoid_spec);
    const auto omega = resolve_elements(handle, omega_spec);
    const auto interior =
        folner_interior(handle, omega, resolve_elements(handle, k_spec));
    const Fraction delta = Fraction::parse(delta_text);
    const bool pass =
        Fraction(static_cast<long long>(interior.size()), 1) >=
        (Fraction::one() - delta) *
            Fraction(static_cast<long long>(omega.size()), 1);
    json j;
    j["omega_size"] = omega.size();
    j["interior_size"] = interior.size();
    json names = json::array();
    for (const auto& e : interior) names.push_back(to_string(e));
    j["interior"] = std::move(names);
    j["delta"] = delta.str();
    j["pass"] = pass;
    emit(j);
    return pass ? 0 : 1;
  }

  return 2;
}

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const ContractError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
