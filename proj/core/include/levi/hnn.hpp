#ifndef LEVI_HNN_HPP
#define LEVI_HNN_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "levi/analysis.hpp"
#include "levi/selfsim.hpp"

namespace levi {

using BigInt = boost::multiprecision::cpp_int;

/// Arithmetic contract the Britton engine runs over: a group with marked
/// subgroups A, B, a homomorphism phi : A -> B, and left coset
/// decompositions g = rep * a (mod A) and g = rep * b (mod B) whose identity
/// coset is represented by the identity. Implemented for finite groups and
/// for the integers.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;

  virtual BigInt identity() const = 0;
  virtual BigInt mul(const BigInt& a, const BigInt& b) const = 0;
  virtual BigInt inverse(const BigInt& a) const = 0;
  virtual bool equals(const BigInt& a, const BigInt& b) const { return a == b; }
  virtual bool in_A(const BigInt& g) const = 0;
  virtual bool in_B(const BigInt& g) const = 0;
  virtual BigInt apply_phi(const BigInt& a) const = 0;
  virtual BigInt apply_phi_inv(const BigInt& b) const = 0;
  virtual std::pair<BigInt, BigInt> rep_mod_A(const BigInt& g) const = 0;
  virtual std::pair<BigInt, BigInt> rep_mod_B(const BigInt& g) const = 0;
  virtual bool phi_injective() const = 0;
  virtual std::string label(const BigInt& g) const = 0;
  virtual std::optional<BigInt> parse(const std::string& text) const = 0;
};

/// Finite-group oracle for a partial endomorphism phi : A -> B of G.
class FiniteGroupOracle final : public GroupOracle {
 public:
  FiniteGroupOracle(GroupPtr group, PartialHom phi);

  const GroupPtr& group() const { return group_; }
  const PartialHom& phi() const { return phi_; }

  BigInt identity() const override;
  BigInt mul(const BigInt& a, const BigInt& b) const override;
  BigInt inverse(const BigInt& a) const override;
  bool in_A(const BigInt& g) const override;
  bool in_B(const BigInt& g) const override;
  BigInt apply_phi(const BigInt& a) const override;
  BigInt apply_phi_inv(const BigInt& b) const override;
  std::pair<BigInt, BigInt> rep_mod_A(const BigInt& g) const override;
  std::pair<BigInt, BigInt> rep_mod_B(const BigInt& g) const override;
  bool phi_injective() const override;
  std::string label(const BigInt& g) const override;
  std::optional<BigInt> parse(const std::string& text) const override;

 private:
  int idx(const BigInt& g) const;

  GroupPtr group_;
  PartialHom phi_;
  CosetDecomposition cos_a_;
  CosetDecomposition cos_b_;
};

/// The integers with A = n Z, B = m Z and phi(n k) = m k; rep_mod_A(g) is
/// the residue of g in {0..|n|-1}. Coefficients are arbitrary-width.
class IntegerOracle final : public GroupOracle {
 public:
  IntegerOracle(BigInt m, BigInt n);

  const BigInt& m() const { return m_; }
  const BigInt& n() const { return n_; }

  BigInt identity() const override { return 0; }
  BigInt mul(const BigInt& a, const BigInt& b) const override { return a + b; }
  BigInt inverse(const BigInt& a) const override { return -a; }
  bool in_A(const BigInt& g) const override { return g % n_ == 0; }
  bool in_B(const BigInt& g) const override { return g % m_ == 0; }
  BigInt apply_phi(const BigInt& a) const override;
  BigInt apply_phi_inv(const BigInt& b) const override;
  std::pair<BigInt, BigInt> rep_mod_A(const BigInt& g) const override;
  std::pair<BigInt, BigInt> rep_mod_B(const BigInt& g) const override;
  bool phi_injective() const override { return true; }
  std::string label(const BigInt& g) const override { return g.str(); }
  std::optional<BigInt> parse(const std::string& text) const override;

 private:
  BigInt m_;
  BigInt n_;
};

/// HNN presentation Grp<G, t : a t = t phi(a) for a in A>. When phi is not
/// injective only the monoid half applies and t^-1 is rejected.
struct HNNPresentation {
  std::shared_ptr<const GroupOracle> oracle;
  int max_syllables = 64;
  std::string name;
};

/// Britton normal form: syllables (coset representative, t-exponent)
/// followed by an arbitrary trailing group element; no pinches.
struct HNNSyllable {
  BigInt rep;
  int exp = 1;  // +1 or -1

  bool operator==(const HNNSyllable& other) const {
    return exp == other.exp && rep == other.rep;
  }
  bool operator<(const HNNSyllable& other) const {
    if (exp != other.exp) return exp < other.exp;
    return rep < other.rep;
  }
};

struct HNNWord {
  std::vector<HNNSyllable> syllables;
  BigInt tail;

  bool operator==(const HNNWord& other) const {
    return syllables == other.syllables && tail == other.tail;
  }
  bool operator<(const HNNWord& other) const {
    if (syllables != other.syllables) return syllables < other.syllables;
    return tail < other.tail;
  }
  int t_length() const { return static_cast<int>(syllables.size()); }
};

struct HNNToken {
  enum class Kind { Group, Stable };
  Kind kind = Kind::Group;
  BigInt g;           // for Kind::Group
  int exp = 1;        // for Kind::Stable: +1 or -1
  int component = 0;  // stable letter index in amalgam mode

  static HNNToken group(BigInt value) { return HNNToken{Kind::Group, std::move(value), 1, 0}; }
  static HNNToken stable(int exp, int component = 0) {
    return HNNToken{Kind::Stable, 0, exp, component};
  }
};

/// Tokenizes "a t b t^-1 c" (component-indexed "t1", "t2^-1" when
/// component_count > 1); group elements are parsed by the oracle.
std::vector<HNNToken> parse_hnn_word(const GroupOracle& oracle, const std::string& text,
                                     int component_count = 1);

/// Left-to-right Britton reduction with immediate pinch cancellation.
HNNWord hnn_reduce(const HNNPresentation& p, const std::vector<HNNToken>& word);
bool hnn_equal(const HNNPresentation& p, const std::vector<HNNToken>& w1,
               const std::vector<HNNToken>& w2);
std::string hnn_to_string(const HNNPresentation& p, const HNNWord& w);

/// Embedding of an irreducible left Rees monoid into its universal group
/// Grp<G, t : a t = t phi_x(a)>. When phi_x is not injective the relations
/// force a quotient of G; the engine computes that collapse so that normal
/// forms decide equality in the universal group (this is what makes
/// collision search complete for non-right-cancellative monoids).
class MonoidEmbedding {
 public:
  explicit MonoidEmbedding(SelfSimilarAction action, int base_letter = 0);

  const HNNPresentation& presentation() const { return pres_; }
  const SelfSimilarAction& action() const { return action_; }
  bool collapsed() const { return collapsed_; }
  /// Image of a group element of the original G in the presentation group.
  BigInt project(int g) const { return BigInt(project_[g]); }

  /// Spell each letter as (coset representative) t, suffix the unit, reduce.
  HNNWord embed(const ReesElement& e) const;
  std::vector<HNNToken> spell(const ReesElement& e) const;

  /// First pair of distinct monoid elements (length-lex order) with equal
  /// images, among elements of word length <= max_length.
  std::optional<std::pair<ReesElement, ReesElement>> find_collision(int max_length) const;

 private:
  SelfSimilarAction action_;
  int base_letter_ = 0;
  std::vector<int> conj_;      // c_y with c_y . base = y
  std::vector<int> conj_res_;  // c_y|_base
  std::vector<int> project_;   // G -> presentation group indices
  bool collapsed_ = false;
  HNNPresentation pres_;
};

/// Smallest normal subgroup M of G with ker phi <= M that is closed under
/// a in A, phi(a) in M <=> a in M; the image of G in Grp<G,t : at = t phi(a)>
/// is exactly G/M.
Subgroup hnn_collapse(const GroupPtr& g, const PartialHom& phi);

/// Word-problem engine for the amalgamated free product of the universal
/// groups of several irreducible components over one unit group.
struct AmalgamSegment {
  int component = 0;
  std::vector<HNNSyllable> syllables;

  bool operator==(const AmalgamSegment& other) const {
    return component == other.component && syllables == other.syllables;
  }
};

struct AmalgamWord {
  std::vector<AmalgamSegment> segments;
  BigInt tail;

  bool operator==(const AmalgamWord& other) const {
    return segments == other.segments && tail == other.tail;
  }
};

class AmalgamPresentation {
 public:
  /// One partial endomorphism of G per component; all over the same group.
  AmalgamPresentation(GroupPtr group, std::vector<PartialHom> phis, int max_syllables = 64);

  int component_count() const { return static_cast<int>(oracles_.size()); }
  const GroupPtr& group() const { return group_; }
  const GroupPtr& presentation_group() const { return quotient_; }
  bool collapsed() const { return collapsed_; }
  BigInt project(int g) const { return BigInt(project_[g]); }
  const FiniteGroupOracle& oracle(int component) const { return *oracles_[component]; }

  AmalgamWord reduce(const std::vector<HNNToken>& word) const;
  bool equal(const std::vector<HNNToken>& w1, const std::vector<HNNToken>& w2) const;
  std::string to_string(const AmalgamWord& w) const;
  std::vector<HNNToken> parse(const std::string& text) const;

 private:
  GroupPtr group_;
  GroupPtr quotient_;
  std::vector<int> project_;
  bool collapsed_ = false;
  std::vector<std::shared_ptr<FiniteGroupOracle>> oracles_;
  int max_syllables_ = 64;
};

/// Universal group of a (possibly reducible) left Rees monoid: amalgam of
/// the component universal groups, with the monoid embedding map.
class AmalgamEmbedding {
 public:
  explicit AmalgamEmbedding(SelfSimilarAction action);

  const AmalgamPresentation& presentation() const { return pres_; }
  const SelfSimilarAction& action() const { return action_; }

  AmalgamWord embed(const ReesElement& e) const;
  std::vector<HNNToken> spell(const ReesElement& e) const;
  std::optional<std::pair<ReesElement, ReesElement>> find_collision(int max_length) const;

 private:
  SelfSimilarAction action_;
  std::vector<int> letter_component_;
  std::vector<int> conj_;
  std::vector<int> conj_res_;
  AmalgamPresentation pres_;
};

/// Signed alphabet element for the free-group Zappa-Szep product.
struct SignedLetter {
  int letter = 0;
  bool inverse = false;

  bool operator==(const SignedLetter& other) const {
    return letter == other.letter && inverse == other.inverse;
  }
};

struct FreeGroupZSElement {
  std::vector<SignedLetter> word;  // freely reduced
  int unit = 0;

  bool operator==(const FreeGroupZSElement& other) const {
    return word == other.word && unit == other.unit;
  }
};

/// FG(X) bowtie G for a left symmetric action: the action and restriction
/// are extended to inverse letters by g|_{x^-1} = rho_x^{-1}(g) and
/// g . x^-1 = (g|_{x^-1} . x)^-1.
class FreeGroupZS {
 public:
  explicit FreeGroupZS(SelfSimilarAction action);

  const SelfSimilarAction& action() const { return action_; }

  std::vector<SignedLetter> act(int g, const std::vector<SignedLetter>& w) const;
  int res(int g, const std::vector<SignedLetter>& w) const;

  FreeGroupZSElement identity() const;
  FreeGroupZSElement from_rees(const ReesElement& e) const;
  FreeGroupZSElement mul(const FreeGroupZSElement& e1, const FreeGroupZSElement& e2) const;
  FreeGroupZSElement inverse(const FreeGroupZSElement& e) const;
  std::string to_string(const FreeGroupZSElement& e) const;

  static std::vector<SignedLetter> free_reduce(const std::vector<SignedLetter>& w);

 private:
  SelfSimilarAction action_;
  std::vector<std::vector<int>> rho_inv_;  // [x][g'] -> g with g|_x = g'
};

}  // namespace levi

#endif  // LEVI_HNN_HPP
