#ifndef LEVI_ANALYSIS_HPP
#define LEVI_ANALYSIS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "levi/selfsim.hpp"

namespace levi {

enum class GreenRelation { R, L, H, J, D };

GreenRelation green_relation_from_name(std::string_view name);
const char* to_string(GreenRelation rel);

/// Witness for a positive answer: k is the connecting unit for R/L/H, the
/// pair (g,h) conjugates for J/D (e1 = g e2 h).
struct GreenWitness {
  int k = -1;
  int g = -1;
  int h = -1;
};

/// Decides Green's relations by the closed-form criteria for X* bowtie G:
/// R compares words, L searches one unit, J searches a unit pair, D = J.
bool green(const SelfSimilarAction& a, const ReesElement& e1, const ReesElement& e2,
           GreenRelation rel, GreenWitness* witness = nullptr);

/// Stabilizer G_x of a word together with the restriction homomorphism
/// phi_x : G_x -> G, g -> g|_x.
struct StabilizerData {
  std::vector<int> word;
  Subgroup stabilizer;
  PartialHom phi;
};
StabilizerData stabilizer_data(const SelfSimilarAction& a, const std::vector<int>& word);

struct PropertyReport {
  bool irreducible = false;
  bool right_cancellative = false;
  bool cancellative = false;
  bool recurrent = false;
  bool right_reversible = false;
  bool level_transitive = false;  // verified to `depth`
  bool level_transitive_proven = false;
  bool left_symmetric = false;
  bool trivial_action = false;
  bool fundamental = false;
  int depth = 0;
  int orbit_count = 0;
  int kernel_size = 0;
  int basis_size = 0;
  int maximal_principal_ideal_count = 0;
  std::map<std::string, std::string> witnesses;
};

/// All flags from letter-level tests; level transitivity is additionally
/// checked word-by-word to `depth` and reported as proven when the
/// recurrent shortcut applies.
PropertyReport property_report(const SelfSimilarAction& a, int depth = 4);

/// Largest right normal divisor K(S) = {g : gs in sG for all s}, computed
/// as the greatest fixed point of N -> {g in N : g fixes letters, g|_x in N}.
Subgroup kernel(const SelfSimilarAction& a);

struct FundamentalQuotient {
  SelfSimilarAction action;
  QuotientGroup quotient;
};
FundamentalQuotient fundamental_quotient(const SelfSimilarAction& a);

/// Schutzenberger group of the H-class of e = (x,g): g^{-1} phi_x(G_x) g.
Subgroup schutzenberger(const SelfSimilarAction& a, const ReesElement& e);

/// Restriction of the action to one G-orbit of letters; `letters[i]` is the
/// original index of the component's letter i.
struct Component {
  SelfSimilarAction action;
  std::vector<int> letters;
};
std::vector<Component> components(const SelfSimilarAction& a);

/// Orbit index per letter, numbering orbits by their minimal letter.
std::vector<int> letter_orbits(const SelfSimilarAction& a);

/// Alternating factorization of e into maximal single-component runs
/// followed by the unit; multiplying the runs back gives e.
struct BourbakiRun {
  int component = 0;
  std::vector<int> letters;  // original letter indices
};
struct BourbakiFactorization {
  std::vector<BourbakiRun> runs;
  int unit = 0;
};
BourbakiFactorization bourbaki_factor(const SelfSimilarAction& a, const ReesElement& e);

}  // namespace levi

#endif  // LEVI_ANALYSIS_HPP
