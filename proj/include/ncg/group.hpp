#pragma once

#include "ncg/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncg {

/// Index of an element inside a GroupTable.
using Elem = std::uint32_t;
/// Sorted, duplicate-free set of element indices.
using ElementSet = std::vector<Elem>;

/// Largest group a GroupTable will hold.
inline constexpr std::size_t kMaxGroupOrder = 5000;

enum class Family {
  Cyclic,
  D8StarZ4,
  Dihedral,
  DirectProduct,
  ExtraspecialP3,
  FrobeniusPQ,
  GL2,
  GeneralizedQuaternion,
  HanakiU,
  HanakiV,
  M16,
  Metacyclic,
  PSL2,
  Presentation,
  Quasidihedral,
  SG16_3,
  SuzukiSz2,
  Z4SemidirectZ4,
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
std::vector<Family> all_families();

/// A word over generators 1..k; negative entries are inverses.
using Word = std::vector<int>;

struct Presentation {
  int generatorCount = 0;
  std::vector<Word> relators;
  std::size_t cosetBound = 0;
  std::vector<std::string> generatorNames;  // defaults to a, b, c, ...

  [[nodiscard]] std::string generator_name(int g) const;
  [[nodiscard]] std::string word_string(const Word& w) const;
  bool operator==(const Presentation&) const = default;
};

/// Raised when a spec violates its family's parameter constraints.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Which group to build. Parameters are named as in the family descriptions:
/// Dihedral{m}, GeneralizedQuaternion{m}, Quasidihedral{n}, Metacyclic{m,n},
/// FrobeniusPQ{p,q}, PSL2{k}, GL2{q}, HanakiU{n}, HanakiV{p,n},
/// ExtraspecialP3{p,exponent}, Cyclic{k}.
struct GroupSpec {
  Family family = Family::Cyclic;
  std::map<std::string, std::int64_t> params;
  std::vector<GroupSpec> factors;
  std::optional<Presentation> presentation;

  [[nodiscard]] std::int64_t param(const std::string& key) const;
  [[nodiscard]] bool has_param(const std::string& key) const { return params.count(key) != 0; }
  /// Stable display name, e.g. "Dihedral(m=3)", "DirectProduct(Dihedral(m=4),Cyclic(k=2))".
  [[nodiscard]] std::string name() const;

  bool operator==(const GroupSpec&) const = default;

  static GroupSpec make(Family family, std::map<std::string, std::int64_t> params = {});
  static GroupSpec product(GroupSpec a, GroupSpec b);
  static GroupSpec from_presentation(Presentation pres);
};

/// Sweep ordering: family name, then parameters, then factors.
bool spec_less(const GroupSpec& a, const GroupSpec& b);

/// A finite group as an immutable, validated multiplication table.
class GroupTable {
 public:
  /// `mul` is row-major: mul[a * order + b] = a * b. Throws std::invalid_argument
  /// unless the table is a group (identity, inverses, associativity) with unique labels.
  GroupTable(std::vector<Elem> mul, std::vector<std::string> labels, GroupSpec spec);

  [[nodiscard]] std::size_t order() const { return order_; }
  [[nodiscard]] Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  [[nodiscard]] Elem inv(Elem a) const { return inv_[a]; }
  [[nodiscard]] Elem identity() const { return identity_; }
  [[nodiscard]] bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }
  [[nodiscard]] const std::string& label(Elem a) const { return labels_[a]; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const GroupSpec& spec() const { return spec_; }
  [[nodiscard]] std::span<const Elem> row(Elem a) const {
    return {mul_.data() + static_cast<std::size_t>(a) * order_, order_};
  }

 private:
  std::size_t order_;
  std::vector<Elem> mul_;
  Elem identity_ = 0;
  std::vector<Elem> inv_;
  std::vector<std::string> labels_;
  GroupSpec spec_;
};

/// Light's test: associativity of a Latin-square table holds iff it holds with
/// the middle factor ranging over a generating set. Exposed for testing.
bool is_associative(std::span<const Elem> mul, std::size_t order);

bool is_abelian(const GroupTable& g);
std::size_t element_order(const GroupTable& g, Elem x);
Elem power(const GroupTable& g, Elem x, std::int64_t e);

ElementSet center(const GroupTable& g);
ElementSet centralizer(const GroupTable& g, Elem x);
/// Number of distinct centralizers C_G(x), x in G (G itself included).
std::size_t centralizer_count(const GroupTable& g);
std::size_t conjugacy_class_count(const GroupTable& g);
/// |{(x, y) : xy = yx}|.
std::uint64_t commuting_pair_count(const GroupTable& g);

struct CommutativityDegree {
  Rational byPairs;
  Rational byClasses;
  [[nodiscard]] bool agree() const { return byPairs == byClasses; }
};
CommutativityDegree commutativity_degree_both(const GroupTable& g);
/// Pr(G); throws std::logic_error if the two computations disagree.
Rational commutativity_degree(const GroupTable& g);

/// Smallest subgroup containing `gens`.
ElementSet subgroup_generated(const GroupTable& g, std::span<const Elem> gens);
bool is_subgroup(const GroupTable& g, const ElementSet& s);
bool is_normal(const GroupTable& g, const ElementSet& s);

/// G/N with cosets labelled by their smallest-index representative.
GroupTable quotient_by_normal(const GroupTable& g, const ElementSet& n);
GroupTable quotient_by_center(const GroupTable& g);

GroupTable direct_product(const GroupTable& g, const GroupTable& h);

/// Bound on |G| for iso_check_small.
inline constexpr std::size_t kIsoCheckLimit = 64;
/// Exact isomorphism test by generator-image search. Throws
/// std::invalid_argument when |g| > kIsoCheckLimit.
bool iso_check_small(const GroupTable& g, const GroupTable& h);

/// Count of elements per element order, indexed by order.
std::vector<std::size_t> order_profile(const GroupTable& g);

}  // namespace ncg
