#ifndef LEVI_SELFSIM_HPP
#define LEVI_SELFSIM_HPP

#include <optional>
#include <string>
#include <vector>

#include "levi/bimodule.hpp"
#include "levi/group.hpp"

namespace levi {

/// Self-similar action of a finite group on a finite alphabet: the action
/// table g.x and restriction table g|_x at letter level. Word-level values
/// are recomputed by recursion. The pair defines a left Rees monoid
/// X* bowtie G whose elements are ReesElements.
struct SelfSimilarAction {
  GroupPtr group;
  int alphabet_size = 0;
  std::vector<std::vector<int>> act;  // [g][x] -> letter
  std::vector<std::vector<int>> res;  // [g][x] -> group element
  std::vector<std::string> letters;
  std::string name;

  const std::string& letter(int x) const { return letters[x]; }
  std::optional<int> letter_index(std::string_view label) const;
};

struct AxiomViolationReport {
  std::string axiom;  // "SS1".."SS8"
  int g = -1;
  int h = -1;
  std::vector<int> word;
  std::string detail;
};

/// Letter-level SS1, SS2, SS7, SS8 exhaustively, then word-level SS3-SS6 by
/// the recursive extension up to word_depth (those hold by construction, so
/// a failure there signals an implementation bug).
std::optional<AxiomViolationReport> validate_action(const SelfSimilarAction& a,
                                                    int word_depth = 4);
/// Throws Error(AxiomViolation) instead of returning a report.
void require_valid(const SelfSimilarAction& a, int word_depth = 4);

std::vector<int> act_word(const SelfSimilarAction& a, int g, const std::vector<int>& word);
int res_word(const SelfSimilarAction& a, int g, const std::vector<int>& word);

/// Normal form x.g of a monoid element: word over the alphabet and a unit.
struct ReesElement {
  std::vector<int> word;
  int unit = 0;

  bool operator==(const ReesElement& other) const {
    return word == other.word && unit == other.unit;
  }
  bool operator<(const ReesElement& other) const {
    if (word.size() != other.word.size()) return word.size() < other.word.size();
    if (word != other.word) return word < other.word;
    return unit < other.unit;
  }
};

ReesElement rees_identity(const SelfSimilarAction& a);
/// (x,g)(y,h) = (x(g.y), g|_y h)
ReesElement rees_mul(const SelfSimilarAction& a, const ReesElement& e1, const ReesElement& e2);
std::string rees_to_string(const SelfSimilarAction& a, const ReesElement& e);

/// All monoid elements with word length <= max_len, in length-lexicographic
/// order (words lexicographic, units by index).
std::vector<ReesElement> enumerate_rees(const SelfSimilarAction& a, int max_len);

/// One letter with trivial action and restriction alpha: the monoid is
/// N x G with (m,g)(n,h) = (m+n, alpha^n(g) h).
SelfSimilarAction from_endomorphism(const GroupPtr& g, const std::vector<int>& alpha,
                                    std::string name = "");

/// Action read off a covering (right-free) bimodule along a basis
/// transversal: g.e decomposes uniquely as e'.g' with e' in the basis.
SelfSimilarAction from_covering_bimodule(const BimodulePtr& b, std::vector<int> basis = {},
                                         std::string name = "");

/// from_covering_bimodule(from_group_data(data)) for functional gamma.
SelfSimilarAction from_group_data_action(const GroupData& data, std::string name = "");

/// The bimodule of atoms {x.g} of the monoid of an action: left action
/// h.(x,g) = (h.x, h|_x g), right action (x,g).h = (x, gh).
BimodulePtr atom_bimodule(const SelfSimilarAction& a);

/// Change of basis: new letter x represents the atom x.u_x. The action
/// table is unchanged; restrictions become u_{g.x}^{-1} g|_x u_x.
SelfSimilarAction rebase(const SelfSimilarAction& a, const std::vector<int>& unit_choice);

/// The monoid isomorphism from the rebased monoid back to the original:
/// maps each rebased letter x to the atom x.u_x and multiplies out.
ReesElement rebase_embed(const SelfSimilarAction& original, const std::vector<int>& unit_choice,
                         const ReesElement& rebased_element);

}  // namespace levi

#endif  // LEVI_SELFSIM_HPP
