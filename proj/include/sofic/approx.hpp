#ifndef SOFIC_APPROX_HPP_
#define SOFIC_APPROX_HPP_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sofic/labeled_graph.hpp"
#include "sofic/monoid.hpp"
#include "sofic/transformation.hpp"

namespace sofic {

// A candidate sofic approximation: a finite partial assignment of monoid
// elements to self-maps of {0,...,x_size-1}, together with the composition
// convention under which products of images are taken. Elements without an
// assignment act as the identity, mirroring the usual "extend arbitrarily"
// step; verification only ever reads K, K^2 and the identity.
class ApproxMap {
 public:
  ApproxMap(MonoidHandle handle, std::size_t x_size, Convention convention,
            std::map<Element, Transformation> assignments);

  const MonoidHandle& handle() const { return handle_; }
  std::size_t x_size() const { return x_size_; }
  Convention convention() const { return convention_; }
  const std::map<Element, Transformation>& assignments() const {
    return assignments_;
  }

  // The image of an element; identity when unassigned.
  const Transformation& image(const Element& element) const;

  // Copy with one assignment replaced.
  ApproxMap with_assignment(const Element& element,
                            Transformation value) const;

 private:
  MonoidHandle handle_;
  std::size_t x_size_;
  Convention convention_;
  std::map<Element, Transformation> assignments_;
  Transformation identity_;
};

// The exact quality measurements of an ApproxMap over a finite subset K:
// the worst multiplicative defect d(phi(k1 k2), phi(k1) phi(k2)) over
// ordered pairs, the identity defect d(phi(1), Id), and the smallest
// pairwise distance between images of distinct K-elements.
struct DefectReport {
  std::vector<Element> k;
  Fraction max_product_defect;
  std::optional<std::pair<Element, Element>> max_product_pair;
  Fraction identity_defect;
  Fraction min_injectivity = Fraction::one();
  std::optional<std::pair<Element, Element>> min_injectivity_pair;

  bool is_morphism(const Fraction& epsilon) const {
    return max_product_defect <= epsilon && identity_defect <= epsilon;
  }
  bool is_injective(const Fraction& alpha) const {
    return min_injectivity >= alpha;
  }
  bool passes(const Fraction& epsilon, const Fraction& alpha) const {
    return is_morphism(epsilon) && is_injective(alpha);
  }
};

DefectReport defect_report(const ApproxMap& phi,
                           const std::vector<Element>& k);

// Rewrites phi so that the identity maps to Id. Requires phi to verify as a
// (K, 1-eps/2)-injective (K, eps/2)-morphism and returns a verified
// (K, 1-eps)-injective (K, eps)-morphism.
ApproxMap normalize_identity(const ApproxMap& phi,
                             const std::vector<Element>& k,
                             const Fraction& epsilon);

// Composes every assignment with the diagonal embedding into maps of
// X^power. All defect and injectivity values transform exactly as
// d |-> 1 - (1-d)^power.
ApproxMap amplify_approx(const ApproxMap& phi, unsigned power,
                         std::size_t point_budget = kDefaultPointBudget);

// Combines approximations of two finite-table monoids into one of their
// direct product, acting coordinate-wise on X1 x X2. Per pair of elements,
// the combined defect is exactly 1 - (1-d1)(1-d2). Conventions must agree
// and both handles must be finite.
ApproxMap product_approx(const ApproxMap& phi1, const ApproxMap& phi2,
                         std::size_t point_budget = kDefaultPointBudget);

struct AdjoinIdentityApprox {
  ApproxMap phi;
  std::vector<Element> k;       // K as elements of the adjoined monoid
  std::vector<uint32_t> y;      // K u K^2, sorted element indices
  std::size_t z_size = 0;       // |Z|; |X| = |Y| + 1 + |Z|
  DefectReport report;
};

// The explicit approximation of the monoid obtained from a semigroup by
// adjoining an identity: X = Y u {y0} u Z with Y = K u K^2 and
// |Z| = ceil((1-eps)(|Y|+1)/eps), phi(s) sending Z to s, Y into Y where the
// product stays in Y, and everything else to the sink y0. Verified
// (K, 1-eps)-injective and a (K, eps)-morphism by construction.
AdjoinIdentityApprox adjoin_identity_approx(const FiniteSemigroup& s,
                                            const std::vector<uint32_t>&
                                                k_indices,
                                            const Fraction& epsilon);

struct GraphMorphismResult {
  unsigned r0 = 0;  // smallest radius with K u K^2 inside the Cayley ball
  unsigned r = 0;   // 2 * r0, the radius the Weiss check runs at
  WeissReport weiss;
  ApproxMap phi;
  DefectReport report;
};

// Turns a finite labeled graph with mostly-good vertices into an
// approximation on its vertex set: good vertices move along their ball
// isomorphism, bad vertices stay put. Requires the graph to pass the Weiss
// check at radius 2*r0 with delta = epsilon; the returned report carries
// the verification.
GraphMorphismResult graph_to_morphism(const LabeledGraph& g,
                                      const MonoidHandle& handle,
                                      const std::vector<Element>& k,
                                      const Fraction& epsilon,
                                      unsigned jobs = 1);

// The reverse bridge: the graph on X whose sigma-edges follow phi(sigma).
// Requires the diagrammatic convention and phi(1) = Id. The handle must be
// known left-cancellative unless allow_non_cancellative is set.
LabeledGraph morphism_to_graph(const ApproxMap& phi,
                               std::vector<std::string> sigma = {},
                               bool allow_non_cancellative = false);

// delta / (|B_r(1)| * |Sigma| + |B_r(1)|^2): the morphism quality needed so
// that the graph built from a (B_{2r+1}(1), eps)-morphism keeps a
// (1-delta)-fraction of good vertices at radius r.
Fraction epsilon_for_delta(const MonoidHandle& handle, unsigned radius,
                           const Fraction& delta);

// The quantities of the four-element obstruction chain for the bicyclic
// monoid: given candidate images h = phi(1), f = phi(p), g = phi(q),
// k = phi(qp), the triangle inequality forces
// d(k, h) <= d(k, gf) + d(gf, Id) + d(h, Id) with d(gf, Id) = d(fg, Id)
// <= d(h, fg) + d(h, Id), so all morphism constraints <= eps force
// d(k, h) <= 4 eps, incompatible with (K, 1-eps)-injectivity once
// eps < 1/5.
struct Certificate {
  Certificate(Transformation h_, Transformation f_, Transformation g_,
              Transformation k_, Convention convention_, Fraction epsilon_)
      : h(std::move(h_)),
        f(std::move(f_)),
        g(std::move(g_)),
        k(std::move(k_)),
        convention(convention_),
        epsilon(epsilon_) {}

  Transformation h, f, g, k;
  Convention convention;
  Fraction epsilon;
  Fraction d_h_id, d_h_fg, d_fg_id, d_gf_id, d_k_gf, d_k_h;
  bool lemma_equality = false;      // d(fg,Id) == d(gf,Id)
  bool triangle_bounds_hold = false;
  Fraction morphism_defect;         // max(d_h_id, d_h_fg, d_k_gf)
  Fraction chain_bound;             // d_k_gf + d_gf_id + d_h_id
  bool constraints_hold = false;    // morphism_defect <= epsilon
  bool injectivity_met = false;     // d_k_h >= 1 - epsilon
  std::string conclusion;
};

Certificate bicyclic_chain_certificate(
    const Transformation& h, const Transformation& f, const Transformation& g,
    const Transformation& k, const Fraction& epsilon,
    Convention convention = Convention::standard);

}  // namespace sofic

#endif  // SOFIC_APPROX_HPP_
