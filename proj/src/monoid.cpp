#include "sofic/monoid.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace sofic {

const char* to_string(MonoidKind kind) {
  switch (kind) {
    case MonoidKind::free_monoid: return "free";
    case MonoidKind::free_commutative: return "free_commutative";
    case MonoidKind::naturals: return "naturals";
    case MonoidKind::bicyclic: return "bicyclic";
    case MonoidKind::finite: return "finite";
    case MonoidKind::rewriting: return "rewriting";
  }
  return "?";
}

const char* to_string(Cancellativity c) {
  switch (c) {
    case Cancellativity::yes: return "yes";
    case Cancellativity::no: return "no";
    case Cancellativity::unknown: return "unknown";
  }
  return "?";
}

namespace detail {

struct HandleData {
  MonoidKind kind;
  bool reversed = false;
  std::vector<std::string> labels;
  std::optional<FiniteMonoid> finite;
  std::vector<uint32_t> finite_generators;
  std::optional<RewriteSystem> rewriting;
  Cancellativity left_cancellative = Cancellativity::unknown;
};

namespace {

// letters of the bicyclic alphabet
constexpr uint32_t kP = 0;
constexpr uint32_t kQ = 1;

Word bicyclic_form(uint64_t a, uint64_t b) {
  Word form;
  form.reserve(a + b);
  form.insert(form.end(), a, kQ);
  form.insert(form.end(), b, kP);
  return form;
}

std::pair<uint64_t, uint64_t> bicyclic_pair_of(const Word& form) {
  uint64_t a = 0;
  while (a < form.size() && form[a] == kQ) ++a;
  return {a, form.size() - a};
}

// q^a p^b * q^c p^d, cancelling pq = 1 in the middle.
std::pair<uint64_t, uint64_t> bicyclic_product(uint64_t a, uint64_t b,
                                               uint64_t c, uint64_t d) {
  if (b <= c) return {a + c - b, d};
  return {a, b - c + d};
}

Word canonical_word(const HandleData& data, const Word& raw) {
  switch (data.kind) {
    case MonoidKind::free_monoid: {
      if (!data.reversed) return raw;
      return Word(raw.rbegin(), raw.rend());
    }
    case MonoidKind::free_commutative: {
      Word sorted = raw;
      std::sort(sorted.begin(), sorted.end());
      return sorted;
    }
    case MonoidKind::naturals:
      return Word(raw.size(), 0);
    case MonoidKind::bicyclic: {
      uint64_t a = 0, b = 0;
      auto step = [&](uint32_t letter) {
        if (letter == kP) {
          ++b;
        } else if (b > 0) {
          --b;
        } else {
          ++a;
        }
      };
      if (data.reversed) {
        for (auto it = raw.rbegin(); it != raw.rend(); ++it) step(*it);
      } else {
        for (uint32_t letter : raw) step(letter);
      }
      return bicyclic_form(a, b);
    }
    case MonoidKind::finite: {
      uint32_t acc = data.finite->identity();
      for (uint32_t letter : raw) {
        const uint32_t gen = data.finite_generators.at(letter);
        acc = data.finite->product(acc, gen);
      }
      return {acc};
    }
    case MonoidKind::rewriting:
      return data.rewriting->normalize(raw);
  }
  throw DomainError("unreachable monoid kind");
}

void check_letters(const HandleData& data, const Word& word) {
  for (uint32_t letter : word) {
    if (letter >= data.labels.size()) {
      throw DomainError("word letter " + std::to_string(letter) +
                        " outside the generating set");
    }
  }
}

}  // namespace
}  // namespace detail

using detail::HandleData;

namespace {

std::shared_ptr<const HandleData> make_data(HandleData data) {
  return std::make_shared<const HandleData>(std::move(data));
}

}  // namespace

// --- MonoidHandle -----------------------------------------------------------

MonoidHandle MonoidHandle::free_monoid(std::vector<std::string> alphabet) {
  if (alphabet.empty()) throw ValidationError("free monoid: empty alphabet");
  HandleData data;
  data.kind = MonoidKind::free_monoid;
  data.labels = std::move(alphabet);
  data.left_cancellative = Cancellativity::yes;
  return MonoidHandle(make_data(std::move(data)));
}

MonoidHandle MonoidHandle::free_commutative(
    std::vector<std::string> alphabet) {
  if (alphabet.empty()) {
    throw ValidationError("free commutative monoid: empty alphabet");
  }
  HandleData data;
  data.kind = MonoidKind::free_commutative;
  data.labels = std::move(alphabet);
  data.left_cancellative = Cancellativity::yes;
  return MonoidHandle(make_data(std::move(data)));
}

MonoidHandle MonoidHandle::naturals() {
  HandleData data;
  data.kind = MonoidKind::naturals;
  data.labels = {"1"};
  data.left_cancellative = Cancellativity::yes;
  return MonoidHandle(make_data(std::move(data)));
}

MonoidHandle MonoidHandle::bicyclic() {
  HandleData data;
  data.kind = MonoidKind::bicyclic;
  data.labels = {"p", "q"};
  data.left_cancellative = Cancellativity::no;
  return MonoidHandle(make_data(std::move(data)));
}

MonoidHandle MonoidHandle::finite(FiniteMonoid monoid,
                                  std::vector<uint32_t> generators,
                                  std::vector<std::string> labels) {
  HandleData data;
  data.kind = MonoidKind::finite;
  if (generators.empty()) {
    for (uint32_t i = 0; i < monoid.size(); ++i) {
      if (i != monoid.identity()) generators.push_back(i);
    }
  }
  for (uint32_t g : generators) {
    if (g >= monoid.size()) {
      throw ValidationError("finite handle: generator index out of range");
    }
  }
  if (labels.empty()) {
    for (uint32_t g : generators) labels.push_back("g" + std::to_string(g));
  }
  if (labels.size() != generators.size()) {
    throw ValidationError("finite handle: labels do not match generators");
  }
  data.left_cancellative = is_left_cancellative(monoid)
                               ? Cancellativity::yes
                               : Cancellativity::no;
  data.labels = std::move(labels);
  data.finite_generators = std::move(generators);
  data.finite = std::move(monoid);
  return MonoidHandle(make_data(std::move(data)));
}

MonoidHandle MonoidHandle::rewriting(std::vector<std::string> alphabet,
                                     RewriteSystem system) {
  if (alphabet.size() != system.alphabet_size()) {
    throw ValidationError("rewriting handle: alphabet size mismatch");
  }
  HandleData data;
  data.kind = MonoidKind::rewriting;
  data.labels = std::move(alphabet);
  data.rewriting = std::move(system);
  data.left_cancellative = Cancellativity::unknown;
  return MonoidHandle(make_data(std::move(data)));
}

MonoidKind MonoidHandle::kind() const { return data_->kind; }
bool MonoidHandle::is_reversed() const { return data_->reversed; }
Cancellativity MonoidHandle::left_cancellative() const {
  return data_->left_cancellative;
}

std::size_t MonoidHandle::generator_count() const {
  return data_->labels.size();
}

const std::vector<std::string>& MonoidHandle::generator_labels() const {
  return data_->labels;
}

Element MonoidHandle::generator(std::size_t i) const {
  if (i >= data_->labels.size()) {
    throw DomainError("generator index out of range");
  }
  return normalize(*this, {static_cast<uint32_t>(i)});
}

Element MonoidHandle::identity() const { return normalize(*this, {}); }

const FiniteMonoid& MonoidHandle::finite_monoid() const {
  if (!data_->finite) throw DomainError("handle has no finite table");
  return *data_->finite;
}

const RewriteSystem& MonoidHandle::rewrite_system() const {
  if (!data_->rewriting) throw DomainError("handle has no rewrite system");
  return *data_->rewriting;
}

const std::vector<uint32_t>& MonoidHandle::finite_generators() const {
  if (!data_->finite) throw DomainError("handle has no finite table");
  return data_->finite_generators;
}

bool operator==(const MonoidHandle& a, const MonoidHandle& b) {
  if (a.data_ == b.data_) return true;
  const HandleData& x = *a.data_;
  const HandleData& y = *b.data_;
  if (x.kind != y.kind || x.reversed != y.reversed || x.labels != y.labels) {
    return false;
  }
  switch (x.kind) {
    case MonoidKind::finite:
      return *x.finite == *y.finite &&
             x.finite_generators == y.finite_generators;
    case MonoidKind::rewriting:
      return *x.rewriting == *y.rewriting;
    default:
      return true;
  }
}

// --- Element ----------------------------------------------------------------

bool Element::is_identity() const {
  if (handle_.kind() == MonoidKind::finite) {
    return form_.size() == 1 &&
           form_[0] == handle_.finite_monoid().identity();
  }
  return form_.empty();
}

bool operator==(const Element& a, const Element& b) {
  return a.handle_ == b.handle_ && a.form_ == b.form_;
}

bool operator<(const Element& a, const Element& b) {
  if (a.form_.size() != b.form_.size()) {
    return a.form_.size() < b.form_.size();
  }
  return a.form_ < b.form_;
}

// --- Operations -------------------------------------------------------------

Element normalize(const MonoidHandle& handle, const Word& word) {
  if (handle.kind() == MonoidKind::finite) {
    for (uint32_t letter : word) {
      if (letter >= handle.generator_count()) {
        throw DomainError("word letter outside the generating set");
      }
    }
    Word base = word;
    if (handle.is_reversed()) std::reverse(base.begin(), base.end());
    return Element(handle, detail::canonical_word(*handle.data_, base));
  }
  detail::check_letters(*handle.data_, word);
  return Element(handle, detail::canonical_word(*handle.data_, word));
}

Element multiply(const Element& x, const Element& y) {
  if (x.handle() != y.handle()) {
    throw DomainError("multiply: elements belong to different handles");
  }
  const MonoidHandle& h = x.handle();
  const HandleData& data = *h.data_;
  switch (data.kind) {
    case MonoidKind::free_monoid: {
      const Word& first = data.reversed ? y.form() : x.form();
      const Word& second = data.reversed ? x.form() : y.form();
      Word out = first;
      out.insert(out.end(), second.begin(), second.end());
      return Element(h, std::move(out));
    }
    case MonoidKind::free_commutative: {
      Word out;
      out.reserve(x.form().size() + y.form().size());
      std::merge(x.form().begin(), x.form().end(), y.form().begin(),
                 y.form().end(), std::back_inserter(out));
      return Element(h, std::move(out));
    }
    case MonoidKind::naturals:
      return Element(h, Word(x.form().size() + y.form().size(), 0));
    case MonoidKind::bicyclic: {
      auto [a, b] = detail::bicyclic_pair_of(x.form());
      auto [c, d] = detail::bicyclic_pair_of(y.form());
      auto [ra, rb] = data.reversed ? detail::bicyclic_product(c, d, a, b)
                                    : detail::bicyclic_product(a, b, c, d);
      return Element(h, detail::bicyclic_form(ra, rb));
    }
    case MonoidKind::finite:
      return Element(h, {data.finite->product(x.form()[0], y.form()[0])});
    case MonoidKind::rewriting: {
      Word concat = x.form();
      concat.insert(concat.end(), y.form().begin(), y.form().end());
      return Element(h, data.rewriting->normalize(concat));
    }
  }
  throw DomainError("unreachable monoid kind");
}

std::string to_string(const Element& element) {
  const MonoidHandle& h = element.handle();
  switch (h.kind()) {
    case MonoidKind::naturals:
      return std::to_string(element.form().size());
    case MonoidKind::finite: {
      std::size_t width = 1, largest = h.finite_monoid().size() - 1;
      while (largest >= 10) {
        largest /= 10;
        ++width;
      }
      std::string digits = std::to_string(element.form()[0]);
      return "e" + std::string(width - digits.size(), '0') + digits;
    }
    default: {
      if (element.form().empty()) return "1";
      std::string out;
      for (uint32_t letter : element.form()) {
        out += h.generator_labels()[letter];
      }
      return out;
    }
  }
}

Element parse_element(const MonoidHandle& handle, const std::string& text) {
  const HandleData& data = *handle.data_;
  if (data.kind == MonoidKind::naturals) {
    std::size_t used = 0;
    unsigned long k = 0;
    try {
      k = std::stoul(text, &used);
    } catch (const std::exception&) {
      throw ParseError("cannot parse element '" + text + "'");
    }
    if (used != text.size()) {
      throw ParseError("cannot parse element '" + text + "'");
    }
    return Element(handle, Word(k, 0));
  }
  if (data.kind == MonoidKind::finite) {
    std::string body = text;
    if (!body.empty() && body[0] == 'e') body = body.substr(1);
    std::size_t used = 0;
    unsigned long idx = 0;
    try {
      idx = std::stoul(body, &used);
    } catch (const std::exception&) {
      throw ParseError("cannot parse element '" + text + "'");
    }
    if (used != body.size() || idx >= data.finite->size()) {
      throw ParseError("cannot parse element '" + text + "'");
    }
    return Element(handle, {static_cast<uint32_t>(idx)});
  }
  const auto& labels = data.labels;
  const bool one_is_label =
      std::find(labels.begin(), labels.end(), "1") != labels.end();
  if (text == "1" && !one_is_label) return handle.identity();
  Word word;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t best = labels.size();
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const std::string& label = labels[i];
      if (label.size() > best_len &&
          text.compare(pos, label.size(), label) == 0) {
        best = i;
        best_len = label.size();
      }
    }
    if (best == labels.size()) {
      throw ParseError("cannot parse element '" + text + "' at position " +
                       std::to_string(pos));
    }
    word.push_back(static_cast<uint32_t>(best));
    pos += best_len;
  }
  // The text denotes a word in the element set, so reduce it with the base
  // multiplication even on reversed handles.
  return Element(handle, detail::canonical_word(data, data.reversed
                                                          ? Word(word.rbegin(),
                                                                 word.rend())
                                                          : word));
}

std::vector<Element> elements_ball(const MonoidHandle& handle, unsigned radius,
                                   std::size_t budget) {
  std::set<Element> seen;
  std::deque<std::pair<Element, unsigned>> queue;
  Element one = handle.identity();
  seen.insert(one);
  queue.emplace_back(one, 0u);
  while (!queue.empty()) {
    auto [element, dist] = queue.front();
    queue.pop_front();
    if (dist == radius) continue;
    for (std::size_t i = 0; i < handle.generator_count(); ++i) {
      Element next = multiply(element, handle.generator(i));
      if (seen.insert(next).second) {
        if (seen.size() > budget) {
          throw BudgetError("elements_ball: ball exceeds budget " +
                            std::to_string(budget));
        }
        queue.emplace_back(std::move(next), dist + 1);
      }
    }
  }
  return std::vector<Element>(seen.begin(), seen.end());
}

MonoidHandle opposite(const MonoidHandle& handle) {
  const HandleData& data = *handle.data_;
  switch (data.kind) {
    case MonoidKind::free_commutative:
    case MonoidKind::naturals:
      return handle;
    case MonoidKind::free_monoid:
    case MonoidKind::bicyclic: {
      HandleData copy = data;
      copy.reversed = !copy.reversed;
      return MonoidHandle(make_data(std::move(copy)));
    }
    case MonoidKind::finite: {
      const FiniteMonoid& m = *data.finite;
      std::vector<std::vector<uint32_t>> transposed(
          m.size(), std::vector<uint32_t>(m.size()));
      for (uint32_t x = 0; x < m.size(); ++x) {
        for (uint32_t y = 0; y < m.size(); ++y) {
          transposed[x][y] = m.product(y, x);
        }
      }
      return MonoidHandle::finite(
          FiniteMonoid(std::move(transposed), m.identity()),
          data.finite_generators, data.labels);
    }
    case MonoidKind::rewriting:
      return MonoidHandle::rewriting(data.labels, data.rewriting->reversed());
  }
  throw DomainError("unreachable monoid kind");
}

std::vector<Element> folner_interior(const MonoidHandle& handle,
                                     const std::vector<Element>& omega,
                                     const std::vector<Element>& k,
                                     std::size_t budget) {
  if (k.empty()) {
    throw DomainError("folner_interior: K must be non-empty");
  }
  std::set<Element> omega_set(omega.begin(), omega.end());
  std::vector<Element> candidates;
  if (handle.kind() == MonoidKind::finite) {
    for (uint32_t i = 0; i < handle.finite_monoid().size(); ++i) {
      candidates.push_back(finite_element(handle, i));
    }
  } else {
    // s*k lands in omega only if |s| <= max |omega| + max |k| for the
    // built-in normal forms, so this ball contains every solution.
    std::size_t max_omega = 0, max_k = 0;
    for (const Element& e : omega) {
      max_omega = std::max(max_omega, e.form().size());
    }
    for (const Element& e : k) max_k = std::max(max_k, e.form().size());
    candidates =
        elements_ball(handle, static_cast<unsigned>(max_omega + max_k),
                      budget);
  }
  std::vector<Element> interior;
  for (const Element& s : candidates) {
    bool inside = true;
    for (const Element& key : k) {
      if (omega_set.count(multiply(s, key)) == 0) {
        inside = false;
        break;
      }
    }
    if (inside) interior.push_back(s);
  }
  std::sort(interior.begin(), interior.end());
  return interior;
}

std::pair<uint64_t, uint64_t> bicyclic_pair(const Element& element) {
  if (element.handle().kind() != MonoidKind::bicyclic) {
    throw DomainError("bicyclic_pair: not a bicyclic element");
  }
  return detail::bicyclic_pair_of(element.form());
}

Element bicyclic_element(const MonoidHandle& handle, uint64_t a, uint64_t b) {
  if (handle.kind() != MonoidKind::bicyclic) {
    throw DomainError("bicyclic_element: not a bicyclic handle");
  }
  return Element(handle, detail::bicyclic_form(a, b));
}

Element finite_element(const MonoidHandle& handle, uint32_t index) {
  if (handle.kind() != MonoidKind::finite) {
    throw DomainError("finite_element: not a finite handle");
  }
  if (index >= handle.finite_monoid().size()) {
    throw DomainError("finite_element: index out of range");
  }
  return Element(handle, {index});
}

}  // namespace sofic
