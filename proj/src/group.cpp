#include "ncg/group.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

namespace ncg {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 18> kFamilyNames{{
    {Family::Cyclic, "Cyclic"},
    {Family::D8StarZ4, "D8StarZ4"},
    {Family::Dihedral, "Dihedral"},
    {Family::DirectProduct, "DirectProduct"},
    {Family::ExtraspecialP3, "ExtraspecialP3"},
    {Family::FrobeniusPQ, "FrobeniusPQ"},
    {Family::GL2, "GL2"},
    {Family::GeneralizedQuaternion, "GeneralizedQuaternion"},
    {Family::HanakiU, "HanakiU"},
    {Family::HanakiV, "HanakiV"},
    {Family::M16, "M16"},
    {Family::Metacyclic, "Metacyclic"},
    {Family::PSL2, "PSL2"},
    {Family::Presentation, "Presentation"},
    {Family::Quasidihedral, "Quasidihedral"},
    {Family::SG16_3, "SG16_3"},
    {Family::SuzukiSz2, "SuzukiSz2"},
    {Family::Z4SemidirectZ4, "Z4SemidirectZ4"},
}};

// Membership bitmap over a group of the given order.
std::vector<char> membership(const ElementSet& s, std::size_t order) {
  std::vector<char> in(order, 0);
  for (Elem x : s) in[x] = 1;
  return in;
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames) {
    if (fam == f) return name;
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [fam, n] : kFamilyNames) {
    if (n == name) return fam;
  }
  return std::nullopt;
}

std::vector<Family> all_families() {
  std::vector<Family> out;
  for (const auto& [fam, name] : kFamilyNames) out.push_back(fam);
  return out;
}

std::string Presentation::generator_name(int g) const {
  const auto idx = static_cast<std::size_t>(g - 1);
  if (idx < generatorNames.size()) return generatorNames[idx];
  return std::string(1, static_cast<char>('a' + g - 1));
}

std::string Presentation::word_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const auto run = static_cast<long>(j - i);
    if (!out.empty()) out += ' ';
    out += generator_name(std::abs(w[i]));
    const long exp = w[i] < 0 ? -run : run;
    if (exp != 1) out += '^' + std::to_string(exp);
    i = j;
  }
  return out;
}

std::int64_t GroupSpec::param(const std::string& key) const {
  const auto it = params.find(key);
  if (it == params.end()) {
    throw SpecError(std::string(family_name(family)) + " requires parameter '" + key + "'");
  }
  return it->second;
}

std::string GroupSpec::name() const {
  std::string out(family_name(family));
  out += '(';
  bool first = true;
  auto sep = [&] {
    if (!first) out += ',';
    first = false;
  };
  for (const auto& [k, v] : params) {
    sep();
    out += k + '=' + std::to_string(v);
  }
  for (const auto& f : factors) {
    sep();
    out += f.name();
  }
  if (presentation) {
    sep();
    out += '<';
    for (int g = 1; g <= presentation->generatorCount; ++g) {
      if (g > 1) out += ',';
      out += presentation->generator_name(g);
    }
    out += " | ";
    for (std::size_t i = 0; i < presentation->relators.size(); ++i) {
      if (i) out += ", ";
      out += presentation->word_string(presentation->relators[i]);
    }
    out += '>';
  }
  out += ')';
  return out;
}

GroupSpec GroupSpec::make(Family family, std::map<std::string, std::int64_t> params) {
  GroupSpec s;
  s.family = family;
  s.params = std::move(params);
  return s;
}

GroupSpec GroupSpec::product(GroupSpec a, GroupSpec b) {
  GroupSpec s;
  s.family = Family::DirectProduct;
  s.factors = {std::move(a), std::move(b)};
  return s;
}

GroupSpec GroupSpec::from_presentation(Presentation pres) {
  GroupSpec s;
  s.family = Family::Presentation;
  s.presentation = std::move(pres);
  return s;
}

bool spec_less(const GroupSpec& a, const GroupSpec& b) {
  const auto fa = family_name(a.family);
  const auto fb = family_name(b.family);
  if (fa != fb) return fa < fb;
  if (a.params != b.params) return a.params < b.params;
  const auto n = std::min(a.factors.size(), b.factors.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (spec_less(a.factors[i], b.factors[i])) return true;
    if (spec_less(b.factors[i], a.factors[i])) return false;
  }
  if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
  return a.name() < b.name();
}

bool is_associative(std::span<const Elem> mul, std::size_t order) {
  auto at = [&](std::size_t a, std::size_t b) -> std::size_t { return mul[a * order + b]; };
  std::vector<std::size_t> gens;
  std::vector<char> reached(order, 0);
  std::size_t reached_count = 0;
  for (std::size_t x = 0; x < order && reached_count < order; ++x) {
    if (reached[x]) continue;
    gens.push_back(x);
    std::fill(reached.begin(), reached.end(), 0);
    std::vector<std::size_t> queue(gens.begin(), gens.end());
    for (auto s : gens) reached[s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto s : gens) {
        const auto z = at(queue[head], s);
        if (!reached[z]) {
          reached[z] = 1;
          queue.push_back(z);
        }
      }
    }
    reached_count = queue.size();
  }
  for (auto s : gens) {
    for (std::size_t x = 0; x < order; ++x) {
      const auto xs = at(x, s);
      for (std::size_t y = 0; y < order; ++y) {
        if (at(xs, y) != at(x, at(s, y))) return false;
      }
    }
  }
  return true;
}

GroupTable::GroupTable(std::vector<Elem> mul, std::vector<std::string> labels, GroupSpec spec)
    : order_(labels.size()), mul_(std::move(mul)), labels_(std::move(labels)), spec_(std::move(spec)) {
  if (order_ == 0) throw std::invalid_argument("group table must be nonempty");
  if (order_ > kMaxGroupOrder) {
    throw std::invalid_argument("group order " + std::to_string(order_) + " exceeds " +
                                std::to_string(kMaxGroupOrder));
  }
  if (mul_.size() != order_ * order_) throw std::invalid_argument("multiplication table has wrong size");
  for (Elem v : mul_) {
    if (v >= order_) throw std::invalid_argument("multiplication table entry out of range");
  }
  // Latin square: every row and column is a permutation.
  std::vector<char> seen(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < order_; ++b) {
      auto& s = seen[mul_[a * order_ + b]];
      if (s) throw std::invalid_argument("multiplication table row is not a permutation");
      s = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < order_; ++b) {
      auto& s = seen[mul_[b * order_ + a]];
      if (s) throw std::invalid_argument("multiplication table column is not a permutation");
      s = 1;
    }
  }
  // In a Latin square x*x = x identifies the only possible identity.
  bool found = false;
  for (std::size_t x = 0; x < order_ && !found; ++x) {
    if (mul_[x * order_ + x] != x) continue;
    bool two_sided = true;
    for (std::size_t y = 0; y < order_ && two_sided; ++y) {
      two_sided = mul_[x * order_ + y] == y && mul_[y * order_ + x] == y;
    }
    if (two_sided) {
      identity_ = static_cast<Elem>(x);
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("multiplication table has no two-sided identity");
  inv_.resize(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    std::size_t b = 0;
    while (mul_[a * order_ + b] != identity_) ++b;
    if (mul_[b * order_ + a] != identity_) throw std::invalid_argument("element without two-sided inverse");
    inv_[a] = static_cast<Elem>(b);
  }
  if (!is_associative(mul_, order_)) throw std::invalid_argument("multiplication table is not associative");
  std::unordered_set<std::string> unique(labels_.begin(), labels_.end());
  if (unique.size() != labels_.size()) throw std::invalid_argument("group element labels are not unique");
}

bool is_abelian(const GroupTable& g) {
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = a + 1; b < g.order(); ++b) {
      if (!g.commute(a, b)) return false;
    }
  }
  return true;
}

std::size_t element_order(const GroupTable& g, Elem x) {
  std::size_t k = 1;
  for (Elem y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

Elem power(const GroupTable& g, Elem x, std::int64_t e) {
  if (e < 0) {
    x = g.inv(x);
    e = -e;
  }
  Elem out = g.identity();
  while (e > 0) {
    if (e & 1) out = g.mul(out, x);
    x = g.mul(x, x);
    e >>= 1;
  }
  return out;
}

ElementSet center(const GroupTable& g) {
  ElementSet out;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < g.order() && central; ++y) central = g.commute(x, y);
    if (central) out.push_back(x);
  }
  return out;
}

ElementSet centralizer(const GroupTable& g, Elem x) {
  ElementSet out;
  for (Elem y = 0; y < g.order(); ++y) {
    if (g.commute(x, y)) out.push_back(y);
  }
  return out;
}

std::size_t centralizer_count(const GroupTable& g) {
  const std::size_t words = (g.order() + 63) / 64;
  std::set<std::vector<std::uint64_t>> distinct;
  for (Elem x = 0; x < g.order(); ++x) {
    std::vector<std::uint64_t> bits(words, 0);
    for (Elem y = 0; y < g.order(); ++y) {
      if (g.commute(x, y)) bits[y / 64] |= std::uint64_t{1} << (y % 64);
    }
    distinct.insert(std::move(bits));
  }
  return distinct.size();
}

std::size_t conjugacy_class_count(const GroupTable& g) {
  std::vector<char> seen(g.order(), 0);
  std::size_t classes = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++classes;
    for (Elem h = 0; h < g.order(); ++h) seen[g.mul(g.mul(h, x), g.inv(h))] = 1;
  }
  return classes;
}

std::uint64_t commuting_pair_count(const GroupTable& g) {
  std::uint64_t count = 0;
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) count += g.commute(a, b) ? 1 : 0;
  }
  return count;
}

CommutativityDegree commutativity_degree_both(const GroupTable& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  return {make_rational(static_cast<std::int64_t>(commuting_pair_count(g)), n * n),
          make_rational(static_cast<std::int64_t>(conjugacy_class_count(g)), n)};
}

Rational commutativity_degree(const GroupTable& g) {
  const auto both = commutativity_degree_both(g);
  if (!both.agree()) {
    throw std::logic_error("commutativity degree: pair count " + to_string(both.byPairs) +
                           " disagrees with class count " + to_string(both.byClasses));
  }
  return both.byPairs;
}

ElementSet subgroup_generated(const GroupTable& g, std::span<const Elem> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> queue{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Elem s : gens) {
      const Elem z = g.mul(queue[head], s);
      if (!in[z]) {
        in[z] = 1;
        queue.push_back(z);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool is_subgroup(const GroupTable& g, const ElementSet& s) {
  if (s.empty() || !std::is_sorted(s.begin(), s.end()) ||
      std::adjacent_find(s.begin(), s.end()) != s.end() || s.back() >= g.order()) {
    return false;
  }
  const auto in = membership(s, g.order());
  if (!in[g.identity()]) return false;
  for (Elem a : s) {
    for (Elem b : s) {
      if (!in[g.mul(a, b)]) return false;
    }
  }
  return true;
}

bool is_normal(const GroupTable& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) return false;
  const auto in = membership(s, g.order());
  for (Elem h = 0; h < g.order(); ++h) {
    for (Elem x : s) {
      if (!in[g.mul(g.mul(h, x), g.inv(h))]) return false;
    }
  }
  return true;
}

GroupTable quotient_by_normal(const GroupTable& g, const ElementSet& n) {
  if (!is_subgroup(g, n)) throw std::invalid_argument("quotient_by_normal: not a subgroup");
  if (!is_normal(g, n)) throw std::invalid_argument("quotient_by_normal: subgroup is not normal");
  constexpr Elem kUnassigned = ~Elem{0};
  std::vector<Elem> coset_of(g.order(), kUnassigned);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kUnassigned) continue;
    const auto id = static_cast<Elem>(reps.size());
    for (Elem y : n) coset_of[g.mul(x, y)] = id;
    reps.push_back(x);
  }
  const auto k = reps.size();
  std::vector<Elem> mul(k * k);
  std::vector<std::string> labels;
  labels.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(g.label(reps[i]));
    for (std::size_t j = 0; j < k; ++j) mul[i * k + j] = coset_of[g.mul(reps[i], reps[j])];
  }
  return GroupTable(std::move(mul), std::move(labels), g.spec());
}

GroupTable quotient_by_center(const GroupTable& g) { return quotient_by_normal(g, center(g)); }

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const auto ng = g.order();
  const auto nh = h.order();
  const auto n = ng * nh;
  if (n > kMaxGroupOrder) throw std::invalid_argument("direct product order exceeds limit");
  std::vector<Elem> mul(n * n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back("(" + g.label(static_cast<Elem>(a / nh)) + "," + h.label(static_cast<Elem>(a % nh)) + ")");
    for (std::size_t b = 0; b < n; ++b) {
      const auto x = g.mul(static_cast<Elem>(a / nh), static_cast<Elem>(b / nh));
      const auto y = h.mul(static_cast<Elem>(a % nh), static_cast<Elem>(b % nh));
      mul[a * n + b] = static_cast<Elem>(x * nh + y);
    }
  }
  return GroupTable(std::move(mul), std::move(labels), GroupSpec::product(g.spec(), h.spec()));
}

std::vector<std::size_t> order_profile(const GroupTable& g) {
  std::vector<std::size_t> profile(g.order() + 1, 0);
  for (Elem x = 0; x < g.order(); ++x) ++profile[element_order(g, x)];
  return profile;
}

bool iso_check_small(const GroupTable& g, const GroupTable& h) {
  if (g.order() > kIsoCheckLimit || h.order() > kIsoCheckLimit) {
    throw std::invalid_argument("iso_check_small limited to groups of order <= " + std::to_string(kIsoCheckLimit));
  }
  if (g.order() != h.order()) return false;
  if (order_profile(g) != order_profile(h)) return false;
  if (center(g).size() != center(h).size()) return false;

  // Generators of g, preferring high element order so few are needed.
  std::vector<Elem> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), Elem{0});
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Elem a, Elem b) { return element_order(g, a) > element_order(g, b); });
  std::vector<Elem> gens;
  ElementSet generated{g.identity()};
  for (Elem x : by_order) {
    if (std::binary_search(generated.begin(), generated.end(), x)) continue;
    gens.push_back(x);
    generated = subgroup_generated(g, gens);
    if (generated.size() == g.order()) break;
  }

  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto ord = element_order(g, gens[i]);
    for (Elem y = 0; y < h.order(); ++y) {
      if (element_order(h, y) == ord) candidates[i].push_back(y);
    }
  }

  constexpr Elem kNone = ~Elem{0};
  std::vector<Elem> images(gens.size());
  // Extends the map on <gens[0..k)> from the identity; false on any conflict.
  auto consistent = [&](std::size_t k) {
    std::vector<Elem> phi(g.order(), kNone);
    std::vector<char> used(h.order(), 0);
    phi[g.identity()] = h.identity();
    used[h.identity()] = 1;
    std::vector<Elem> queue{g.identity()};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Elem u = queue[head];
      for (std::size_t j = 0; j < k; ++j) {
        const Elem v = g.mul(u, gens[j]);
        const Elem w = h.mul(phi[u], images[j]);
        if (phi[v] == kNone) {
          if (used[w]) return false;
          phi[v] = w;
          used[w] = 1;
          queue.push_back(v);
        } else if (phi[v] != w) {
          return false;
        }
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t i) {
    if (i == gens.size()) return true;
    for (Elem y : candidates[i]) {
      images[i] = y;
      if (consistent(i + 1) && search(i + 1)) return true;
    }
    return false;
  };
  return search(0);
}

}  // namespace ncg
