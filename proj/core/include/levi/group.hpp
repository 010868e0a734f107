#ifndef LEVI_GROUP_HPP
#define LEVI_GROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "levi/errors.hpp"

namespace levi {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group given by its multiplication table. Elements are indices
/// into the table; equality of elements is index equality and comparing
/// indices across two different groups is a usage error. Instances are
/// immutable after construction and shared through GroupPtr.
class FiniteGroup {
 public:
  /// Validates the table: Latin square, two-sided identity, inverses and
  /// associativity (exhaustively up to order 64, by Light's test on a
  /// generating set above that). Throws Error with the first violated law.
  static GroupPtr from_mul_table(const std::vector<std::vector<int>>& table,
                                 std::vector<std::string> labels = {},
                                 std::string name = "");

  /// Closure of the generators under composition, breadth-first, identity
  /// first. Composition convention: (p*q)(i) = p[q[i]]. Elements are
  /// labelled with cycle notation.
  static GroupPtr from_permutations(int degree,
                                    const std::vector<std::vector<int>>& generators,
                                    int order_limit = 10080,
                                    std::string name = "");

  static GroupPtr trivial();
  static GroupPtr cyclic(int n, std::string name = "");
  static GroupPtr symmetric(int n);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  /// g^{-1} a g
  int conj(int a, int g) const { return mul(mul(inv(g), a), g); }
  int element_order(int a) const;
  bool valid_index(int a) const { return a >= 0 && a < order_; }

  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(std::string_view label) const;
  const std::string& name() const { return name_; }

  const std::vector<std::vector<int>>& mul_table() const { return table_; }

 private:
  FiniteGroup() = default;

  int order_ = 0;
  int identity_ = 0;
  std::vector<int> mul_;  // row-major order_ x order_
  std::vector<int> inv_;
  std::vector<std::vector<int>> table_;  // retained for serialization
  std::vector<std::string> labels_;
  std::string name_;
};

/// Subset of a FiniteGroup verified to contain the identity and be closed
/// under multiplication and inverse.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(GroupPtr parent, std::vector<int> elements);

  static Subgroup closure(GroupPtr group, const std::vector<int>& seeds);
  static Subgroup trivial(GroupPtr group);
  static Subgroup whole(GroupPtr group);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool contains(int g) const { return member_[g] != 0; }
  bool is_normal() const;  // in the parent group

  bool operator==(const Subgroup& other) const {
    return parent_ == other.parent_ && elements_ == other.elements_;
  }

 private:
  GroupPtr parent_;
  std::vector<int> elements_;  // sorted
  std::vector<char> member_;
};

/// Left coset decomposition G = union of rep * H. The identity coset is
/// listed first with representative the identity; every other coset is
/// represented by its minimal element index.
struct CosetDecomposition {
  std::vector<int> transversal;
  std::vector<int> coset_of;  // g -> index into transversal
  std::vector<int> h_part;    // g -> h in H with g = transversal[coset_of[g]] * h
};

CosetDecomposition left_cosets(const GroupPtr& group, const Subgroup& h);

/// Homomorphism defined on a subgroup of its parent group ("partial
/// endomorphism" when the codomain is the same group). The image subgroup
/// and injectivity flag are computed on construction.
class PartialHom {
 public:
  PartialHom() = default;
  /// images[i] is the image of domain.elements()[i].
  PartialHom(Subgroup domain, GroupPtr codomain, const std::vector<int>& images);

  /// Extends images on a generating set of the domain; throws
  /// NotAHomomorphism with a witness pair if no extension exists.
  static PartialHom from_generators(const Subgroup& domain, GroupPtr codomain,
                                    const std::vector<std::pair<int, int>>& gen_images);
  static PartialHom identity_on(const Subgroup& s);

  const Subgroup& domain() const { return domain_; }
  const Subgroup& image() const { return image_; }
  const GroupPtr& codomain() const { return codomain_; }
  bool injective() const { return injective_; }
  bool defined_at(int a) const { return domain_.contains(a); }
  int apply(int a) const;
  std::optional<int> preimage(int b) const;

 private:
  Subgroup domain_;
  GroupPtr codomain_;
  std::vector<int> map_;  // full parent-order table, -1 outside the domain
  Subgroup image_;
  bool injective_ = false;
};

/// G/N for N normal; projection maps old indices to quotient indices.
struct QuotientGroup {
  GroupPtr group;
  std::vector<int> projection;
};

QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& n);

}  // namespace levi

#endif  // LEVI_GROUP_HPP
