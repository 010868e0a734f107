#ifndef LEVI_BIMODULE_HPP
#define LEVI_BIMODULE_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "levi/group.hpp"

namespace levi {

class Bimodule;
using BimodulePtr = std::shared_ptr<const Bimodule>;

/// Finite set with commuting left and right actions of one group. Houses
/// the atoms of a Levi monoid; tensor words over the carrier make up the
/// rest of the monoid.
class Bimodule {
 public:
  /// Validates both action laws and the compatibility (g*x)*h = g*(x*h).
  static BimodulePtr from_tables(GroupPtr group, int carrier_size,
                                 const std::vector<std::vector<int>>& left,
                                 const std::vector<std::vector<int>>& right,
                                 std::vector<std::string> labels = {},
                                 std::string name = "");

  const GroupPtr& group() const { return group_; }
  int carrier_size() const { return carrier_size_; }
  int left(int g, int x) const { return left_[static_cast<size_t>(g) * carrier_size_ + x]; }
  int right(int x, int g) const { return right_[static_cast<size_t>(x) * group_->order() + g]; }
  bool valid_point(int x) const { return x >= 0 && x < carrier_size_; }

  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(std::string_view label) const;
  const std::string& name() const { return name_; }

 private:
  Bimodule() = default;

  GroupPtr group_;
  int carrier_size_ = 0;
  std::vector<int> left_;   // [g][x]
  std::vector<int> right_;  // [x][g]
  std::vector<std::string> labels_;
  std::string name_;
};

/// Triple (H, gamma, K): two subgroups and a subdirect subgroup of H x K.
/// Seed data for irreducible bimodules.
struct GroupData {
  GroupPtr group;
  Subgroup h;
  Subgroup k;
  std::vector<std::pair<int, int>> gamma;  // sorted pairs

  /// Validates: gamma is a subgroup of H x K projecting onto both components.
  static GroupData make(GroupPtr group, Subgroup h, Subgroup k,
                        std::vector<std::pair<int, int>> gamma);
  /// gamma = graph of phi (domain H = dom phi, K = im phi).
  static GroupData graph_of(const PartialHom& phi);
  static GroupData full_product(const Subgroup& h, const Subgroup& k);

  bool gamma_contains(int a, int b) const;
  /// True when gamma is the graph of a function H -> K.
  bool gamma_functional() const;
  /// The partial endomorphism whose graph gamma is; GammaNotFunctional otherwise.
  PartialHom gamma_as_hom() const;

  bool operator==(const GroupData& other) const {
    return group == other.group && h == other.h && k == other.k && gamma == other.gamma;
  }
};

struct PointedBimodule {
  BimodulePtr bimodule;
  int point = 0;
};

/// Goursat data of a gamma: two normal subgroups and an isomorphism of the
/// quotients, carried on coset transversals.
struct GoursatForm {
  Subgroup n_h;              // {h in H : (h,1) in gamma}, normal in H
  Subgroup n_k;              // {k in K : (1,k) in gamma}, normal in K
  std::vector<int> h_reps;   // transversal of N_H in H
  std::vector<int> k_reps;   // transversal of N_K in K
  std::vector<int> theta;    // h_reps[i] maps to coset of k_reps[theta[i]]
};

/// Carrier = classes [g,h] of G x G; left action on the first coordinate,
/// right action on the second; point = class of (1,1). Carrier size is
/// |G|^2 / |gamma|.
PointedBimodule from_group_data(const GroupData& data);

/// H = {g : g.x in x.G}, K = {g : x.g in G.x}, gamma = {(g,h) : g.x = x.h}.
GroupData extract_group_data(const PointedBimodule& pb);

/// Searches G x G for inner automorphisms carrying one datum to the other;
/// returns the lexicographically first witness (a, b) or nullopt.
std::optional<std::pair<int, int>> conjugate_group_data(const GroupData& d1,
                                                        const GroupData& d2);

GoursatForm goursat_form(const GroupData& data);

struct BimoduleClassification {
  bool right_free = false;
  bool left_free = false;
  bool bifree = false;
  bool irreducible = false;
  int orbit_count = 0;  // two-sided orbits
};

BimoduleClassification classify(const Bimodule& b);

/// One representative per right-G-orbit (minimal carrier index), for a
/// right-free bimodule; every carrier element decomposes uniquely as rep.g.
std::vector<int> basis_transversal(const Bimodule& b);

}  // namespace levi

#endif  // LEVI_BIMODULE_HPP
