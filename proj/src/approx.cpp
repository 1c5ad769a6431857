#include "sofic/approx.hpp"

#include <algorithm>
#include <set>

namespace sofic {

// --- ApproxMap ---------------------------------------------------------------

ApproxMap::ApproxMap(MonoidHandle handle, std::size_t x_size,
                     Convention convention,
                     std::map<Element, Transformation> assignments)
    : handle_(std::move(handle)),
      x_size_(x_size),
      convention_(convention),
      assignments_(std::move(assignments)),
      identity_(Transformation::identity(x_size == 0 ? 1 : x_size)) {
  if (x_size_ == 0) {
    throw ValidationError("ApproxMap: X must be non-empty");
  }
  for (const auto& [element, value] : assignments_) {
    if (element.handle() != handle_) {
      throw DomainError("ApproxMap: assigned element from another handle");
    }
    if (value.domain_size() != x_size_) {
      throw ValidationError(
          "ApproxMap: transformation domain size " +
          std::to_string(value.domain_size()) + " does not match x_size " +
          std::to_string(x_size_));
    }
  }
}

const Transformation& ApproxMap::image(const Element& element) const {
  auto it = assignments_.find(element);
  return it == assignments_.end() ? identity_ : it->second;
}

ApproxMap ApproxMap::with_assignment(const Element& element,
                                     Transformation value) const {
  auto assignments = assignments_;
  assignments.insert_or_assign(element, std::move(value));
  return ApproxMap(handle_, x_size_, convention_, std::move(assignments));
}

// --- Defect report -----------------------------------------------------------

DefectReport defect_report(const ApproxMap& phi,
                           const std::vector<Element>& k) {
  std::set<Element> dedup;
  for (const Element& e : k) {
    if (e.handle() != phi.handle()) {
      throw DomainError("defect_report: K element from another handle");
    }
    dedup.insert(e);
  }
  DefectReport report;
  report.k.assign(dedup.begin(), dedup.end());

  report.identity_defect =
      hamming(phi.image(phi.handle().identity()),
              Transformation::identity(phi.x_size()));

  report.max_product_defect = Fraction::zero();
  for (const Element& k1 : report.k) {
    for (const Element& k2 : report.k) {
      Fraction defect =
          hamming(phi.image(multiply(k1, k2)),
                  compose(phi.image(k1), phi.image(k2), phi.convention()));
      if (!report.max_product_pair || defect > report.max_product_defect) {
        report.max_product_defect = defect;
        report.max_product_pair = {k1, k2};
      }
    }
  }

  report.min_injectivity = Fraction::one();
  for (std::size_t i = 0; i < report.k.size(); ++i) {
    for (std::size_t j = i + 1; j < report.k.size(); ++j) {
      Fraction dist = hamming(phi.image(report.k[i]), phi.image(report.k[j]));
      if (!report.min_injectivity_pair || dist < report.min_injectivity) {
        report.min_injectivity = dist;
        report.min_injectivity_pair = {report.k[i], report.k[j]};
      }
    }
  }
  return report;
}

// --- Combinators -------------------------------------------------------------

ApproxMap normalize_identity(const ApproxMap& phi,
                             const std::vector<Element>& k,
                             const Fraction& epsilon) {
  const Fraction half = epsilon / Fraction(2, 1);
  DefectReport before = defect_report(phi, k);
  if (!before.passes(half, Fraction::one() - half)) {
    throw ContractError(
        "normalize_identity: input is not a (K,1-eps/2)-injective "
        "(K,eps/2)-morphism (product defect " +
        before.max_product_defect.str() + ", identity defect " +
        before.identity_defect.str() + ", injectivity " +
        before.min_injectivity.str() + ")");
  }
  ApproxMap fixed = phi.with_assignment(
      phi.handle().identity(), Transformation::identity(phi.x_size()));
  DefectReport after = defect_report(fixed, k);
  if (!after.passes(epsilon, Fraction::one() - epsilon)) {
    throw ContractError(
        "normalize_identity: output failed verification at eps=" +
        epsilon.str());
  }
  return fixed;
}

ApproxMap amplify_approx(const ApproxMap& phi, unsigned power,
                         std::size_t point_budget) {
  if (power == 0) throw DomainError("amplify_approx: power must be positive");
  std::map<Element, Transformation> amplified;
  for (const auto& [element, value] : phi.assignments()) {
    amplified.emplace(element, diagonal_amplify(value, power, point_budget));
  }
  std::size_t size = 1;
  for (unsigned i = 0; i < power; ++i) size *= phi.x_size();
  return ApproxMap(phi.handle(), size, phi.convention(),
                   std::move(amplified));
}

namespace {

MonoidHandle product_finite_handle(const MonoidHandle& h1,
                                   const MonoidHandle& h2) {
  const FiniteMonoid& m1 = h1.finite_monoid();
  const FiniteMonoid& m2 = h2.finite_monoid();
  const std::size_t size = m1.size() * m2.size();
  std::vector<std::vector<uint32_t>> table(size, std::vector<uint32_t>(size));
  for (uint32_t x1 = 0; x1 < m1.size(); ++x1) {
    for (uint32_t x2 = 0; x2 < m2.size(); ++x2) {
      const uint32_t x = x1 * m2.size() + x2;
      for (uint32_t y1 = 0; y1 < m1.size(); ++y1) {
        for (uint32_t y2 = 0; y2 < m2.size(); ++y2) {
          table[x][y1 * m2.size() + y2] =
              m1.product(x1, y1) * m2.size() + m2.product(x2, y2);
        }
      }
    }
  }
  const uint32_t identity = m1.identity() * m2.size() + m2.identity();
  return MonoidHandle::finite(FiniteMonoid(std::move(table), identity));
}

}  // namespace

ApproxMap product_approx(const ApproxMap& phi1, const ApproxMap& phi2,
                         std::size_t point_budget) {
  if (phi1.convention() != phi2.convention()) {
    throw DomainError("product_approx: conventions differ");
  }
  if (phi1.handle().kind() != MonoidKind::finite ||
      phi2.handle().kind() != MonoidKind::finite) {
    throw DomainError(
        "product_approx: both factors must be finite-table handles");
  }
  MonoidHandle product = product_finite_handle(phi1.handle(), phi2.handle());
  const std::size_t m2 = phi2.handle().finite_monoid().size();
  std::map<Element, Transformation> assignments;
  for (const auto& [e1, t1] : phi1.assignments()) {
    for (const auto& [e2, t2] : phi2.assignments()) {
      const uint32_t index = e1.form()[0] * m2 + e2.form()[0];
      assignments.emplace(finite_element(product, index),
                          product_combine({t1, t2}, point_budget));
    }
  }
  return ApproxMap(product, phi1.x_size() * phi2.x_size(), phi1.convention(),
                   std::move(assignments));
}

// --- Adjoin identity ----------------------------------------------------------

AdjoinIdentityApprox adjoin_identity_approx(
    const FiniteSemigroup& s, const std::vector<uint32_t>& k_indices,
    const Fraction& epsilon) {
  if (!(epsilon > Fraction::zero() && epsilon < Fraction::one())) {
    throw DomainError("adjoin_identity_approx: eps must be in (0,1)");
  }
  FiniteMonoid m = adjoin_identity(s);
  MonoidHandle handle = MonoidHandle::finite(m);

  std::set<uint32_t> k_set(k_indices.begin(), k_indices.end());
  for (uint32_t idx : k_set) {
    if (idx >= m.size()) {
      throw DomainError("adjoin_identity_approx: K index out of range");
    }
  }
  if (k_set.empty()) {
    throw DomainError("adjoin_identity_approx: K must be non-empty");
  }

  // Y = K u K^2 inside M(S)
  std::set<uint32_t> y_set = k_set;
  for (uint32_t a : k_set) {
    for (uint32_t b : k_set) y_set.insert(m.product(a, b));
  }
  std::vector<uint32_t> y(y_set.begin(), y_set.end());

  // |Z| = ceil((1-eps)(|Y|+1)/eps) makes both displayed bounds reach eps
  const Fraction need = (Fraction::one() - epsilon) *
                        Fraction(static_cast<long long>(y.size()) + 1, 1) /
                        epsilon;
  const std::size_t z_size = static_cast<std::size_t>(
      (need.num() + need.den() - 1) / need.den());
  const std::size_t x_size = y.size() + 1 + z_size;
  const uint32_t y0_pos = static_cast<uint32_t>(y.size());

  auto position_of = [&](uint32_t element) -> std::optional<uint32_t> {
    auto it = std::lower_bound(y.begin(), y.end(), element);
    if (it == y.end() || *it != element) return std::nullopt;
    return static_cast<uint32_t>(it - y.begin());
  };

  std::map<Element, Transformation> assignments;
  std::set<uint32_t> domain = y_set;
  domain.insert(m.identity());
  for (uint32_t se : domain) {
    if (se == m.identity()) {
      assignments.emplace(finite_element(handle, se),
                          Transformation::identity(x_size));
      continue;
    }
    std::vector<uint32_t> images(x_size);
    const uint32_t s_pos = *position_of(se);
    for (uint32_t x = 0; x < x_size; ++x) {
      if (x >= y0_pos + 1) {
        images[x] = s_pos;  // x in Z
      } else if (x < y0_pos) {
        auto target = position_of(m.product(se, y[x]));
        images[x] = target ? *target : y0_pos;
      } else {
        images[x] = y0_pos;  // x = y0
      }
    }
    assignments.emplace(finite_element(handle, se),
                        Transformation(std::move(images)));
  }

  AdjoinIdentityApprox result{
      ApproxMap(handle, x_size, Convention::standard, std::move(assignments)),
      {},
      y,
      z_size,
      {}};
  for (uint32_t idx : k_set) {
    result.k.push_back(finite_element(handle, idx));
  }
  result.report = defect_report(result.phi, result.k);
  return result;
}

// --- Graph bridges -------------------------------------------------------------

namespace {

unsigned covering_radius(const MonoidHandle& handle,
                         const std::vector<Element>& needed) {
  unsigned radius = 0;
  std::size_t last_size = 0;
  for (;;) {
    std::vector<Element> ball = elements_ball(handle, radius);
    std::set<Element> inside(ball.begin(), ball.end());
    bool covered = true;
    for (const Element& e : needed) {
      if (inside.count(e) == 0) {
        covered = false;
        break;
      }
    }
    if (covered) return radius;
    if (ball.size() == last_size) {
      throw ContractError(
          "graph_to_morphism: K u K^2 is not reachable from the identity "
          "with the handle's generators");
    }
    last_size = ball.size();
    ++radius;
  }
}

}  // namespace

GraphMorphismResult graph_to_morphism(const LabeledGraph& g,
                                      const MonoidHandle& handle,
                                      const std::vector<Element>& k,
                                      const Fraction& epsilon,
                                      unsigned jobs) {
  std::set<Element> closure(k.begin(), k.end());
  for (const Element& k1 : k) {
    for (const Element& k2 : k) closure.insert(multiply(k1, k2));
  }
  closure.insert(handle.identity());
  std::vector<Element> needed(closure.begin(), closure.end());

  const unsigned r0 = covering_radius(handle, needed);
  const unsigned r = 2 * r0;

  WeissReport weiss = weiss_check(g, handle, r, epsilon, jobs);
  if (!weiss.pass) {
    throw ContractError("graph_to_morphism: Weiss check failed at r=" +
                        std::to_string(r) + " (ratio " + weiss.ratio.str() +
                        " < 1 - " + epsilon.str() + ")");
  }

  GoodVertexData good = good_vertex_isomorphisms(g, handle, r, jobs);
  std::map<Element, Transformation> assignments;
  const auto& vertices = g.vertices();
  for (const Element& s : needed) {
    const std::string s_name = to_string(s);
    std::vector<uint32_t> images(vertices.size());
    for (uint32_t v = 0; v < vertices.size(); ++v) {
      auto iso = good.isomorphisms.find(vertices[v]);
      if (iso == good.isomorphisms.end()) {
        images[v] = v;  // bad vertices stay put
      } else {
        images[v] = g.vertex_index(iso->second.at(s_name));
      }
    }
    assignments.emplace(s, Transformation(std::move(images)));
  }

  ApproxMap phi(handle, vertices.size(), Convention::diagrammatic,
                std::move(assignments));
  DefectReport report = defect_report(phi, k);
  return GraphMorphismResult{r0, r, std::move(weiss), std::move(phi),
                             std::move(report)};
}

LabeledGraph morphism_to_graph(const ApproxMap& phi,
                               std::vector<std::string> sigma,
                               bool allow_non_cancellative) {
  if (phi.convention() != Convention::diagrammatic) {
    throw DomainError(
        "morphism_to_graph: requires the diagrammatic convention (edges "
        "follow left-to-right application)");
  }
  if (!phi.image(phi.handle().identity()).is_identity()) {
    throw ContractError(
        "morphism_to_graph: phi(1) != Id; apply normalize_identity first");
  }
  if (!allow_non_cancellative &&
      phi.handle().left_cancellative() != Cancellativity::yes) {
    throw ContractError(
        "morphism_to_graph: handle is not known left-cancellative (pass "
        "allow_non_cancellative to override)");
  }
  const auto& labels = phi.handle().generator_labels();
  if (sigma.empty()) sigma = labels;

  std::size_t width = 1, largest = phi.x_size() - 1;
  while (largest >= 10) {
    largest /= 10;
    ++width;
  }
  auto name = [&](std::size_t v) {
    std::string digits = std::to_string(v);
    return "x" + std::string(width - digits.size(), '0') + digits;
  };

  std::vector<std::string> vertices;
  for (std::size_t v = 0; v < phi.x_size(); ++v) vertices.push_back(name(v));
  std::vector<std::array<std::string, 3>> edges;
  for (const std::string& label : sigma) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
      throw DomainError("morphism_to_graph: '" + label +
                        "' is not a generator label");
    }
    const Element gen = phi.handle().generator(
        static_cast<std::size_t>(it - labels.begin()));
    const Transformation& t = phi.image(gen);
    for (uint32_t v = 0; v < phi.x_size(); ++v) {
      edges.push_back({name(v), label, name(t(v))});
    }
  }
  return LabeledGraph(std::move(sigma), std::move(vertices), edges);
}

Fraction epsilon_for_delta(const MonoidHandle& handle, unsigned radius,
                           const Fraction& delta) {
  const long long ball =
      static_cast<long long>(elements_ball(handle, radius).size());
  const long long sigma = static_cast<long long>(handle.generator_count());
  return delta / Fraction(ball * sigma + ball * ball, 1);
}

// --- Bicyclic chain certificate -------------------------------------------------

Certificate bicyclic_chain_certificate(const Transformation& h,
                                       const Transformation& f,
                                       const Transformation& g,
                                       const Transformation& k,
                                       const Fraction& epsilon,
                                       Convention convention) {
  if (h.domain_size() != f.domain_size() ||
      h.domain_size() != g.domain_size() ||
      h.domain_size() != k.domain_size()) {
    throw DomainError("bicyclic_chain_certificate: domain sizes differ");
  }
  const Transformation id = Transformation::identity(h.domain_size());
  const Transformation fg = compose(f, g, convention);
  const Transformation gf = compose(g, f, convention);

  Certificate cert{h, f, g, k, convention, epsilon};
  cert.d_h_id = hamming(h, id);
  cert.d_h_fg = hamming(h, fg);
  cert.d_fg_id = hamming(fg, id);
  cert.d_gf_id = hamming(gf, id);
  cert.d_k_gf = hamming(k, gf);
  cert.d_k_h = hamming(k, h);
  cert.lemma_equality = cert.d_fg_id == cert.d_gf_id;
  cert.chain_bound = cert.d_k_gf + cert.d_gf_id + cert.d_h_id;
  cert.triangle_bounds_hold =
      cert.d_fg_id <= cert.d_h_id + cert.d_h_fg &&
      cert.d_k_h <= cert.chain_bound;
  cert.morphism_defect =
      std::max({cert.d_h_id, cert.d_h_fg, cert.d_k_gf});
  cert.constraints_hold = cert.morphism_defect <= epsilon;
  cert.injectivity_met = cert.d_k_h >= Fraction::one() - epsilon;

  if (!cert.constraints_hold) {
    cert.conclusion = "morphism constraints exceed eps=" + epsilon.str() +
                      " (worst " + cert.morphism_defect.str() + ")";
  } else if (!cert.injectivity_met) {
    cert.conclusion =
        "morphism constraints hold but d(phi(qp),phi(1)) = " +
        cert.d_k_h.str() + " < 1 - eps; the chain bound caps it at 4*eps = " +
        (Fraction(4, 1) * epsilon).str() +
        ", so no such map is (K,1-eps)-injective";
  } else {
    cert.conclusion =
        "witnesses satisfy every constraint at eps=" + epsilon.str() +
        " (only possible because eps >= 1/5)";
  }
  return cert;
}

}  // namespace sofic
