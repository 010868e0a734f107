#include "levi/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace levi {

GreenRelation green_relation_from_name(std::string_view name) {
  if (name == "R") return GreenRelation::R;
  if (name == "L") return GreenRelation::L;
  if (name == "H") return GreenRelation::H;
  if (name == "J") return GreenRelation::J;
  if (name == "D") return GreenRelation::D;
  fail(ErrorCode::ParseError, "unknown Green relation '" + std::string(name) + "'");
}

const char* to_string(GreenRelation rel) {
  switch (rel) {
    case GreenRelation::R: return "R";
    case GreenRelation::L: return "L";
    case GreenRelation::H: return "H";
    case GreenRelation::J: return "J";
    case GreenRelation::D: return "D";
  }
  return "?";
}

bool green(const SelfSimilarAction& a, const ReesElement& e1, const ReesElement& e2,
           GreenRelation rel, GreenWitness* witness) {
  const auto& g = a.group;
  switch (rel) {
    case GreenRelation::R: {
      if (e1.word != e2.word) return false;
      if (witness) witness->k = g->mul(g->inv(e1.unit), e2.unit);
      return true;
    }
    case GreenRelation::L: {
      // xg L yh iff some unit k has k.y = x and k|_y = g h^{-1}.
      int target = g->mul(e1.unit, g->inv(e2.unit));
      for (int k = 0; k < g->order(); ++k) {
        if (act_word(a, k, e2.word) == e1.word && res_word(a, k, e2.word) == target) {
          if (witness) witness->k = k;
          return true;
        }
      }
      return false;
    }
    case GreenRelation::H: {
      if (e1.word != e2.word) return false;
      return green(a, e1, e2, GreenRelation::L, witness);
    }
    case GreenRelation::J:
    case GreenRelation::D: {
      // a J b iff a = g b h for units g,h; stability gives D = J.
      if (e1.word.size() != e2.word.size()) return false;
      for (int gi = 0; gi < g->order(); ++gi) {
        auto moved = act_word(a, gi, e2.word);
        if (moved != e1.word) continue;
        // gi (x,u) (eps,h) = (gi.x, gi|_x u h); solve for h.
        int h = g->mul(g->inv(g->mul(res_word(a, gi, e2.word), e2.unit)), e1.unit);
        if (witness) {
          witness->g = gi;
          witness->h = h;
        }
        return true;
      }
      return false;
    }
  }
  return false;
}

StabilizerData stabilizer_data(const SelfSimilarAction& a, const std::vector<int>& word) {
  const auto& g = a.group;
  std::vector<int> stab;
  for (int gi = 0; gi < g->order(); ++gi)
    if (act_word(a, gi, word) == word) stab.push_back(gi);
  Subgroup stabilizer(g, stab);
  std::vector<int> images;
  for (int gi : stabilizer.elements()) images.push_back(res_word(a, gi, word));
  PartialHom phi(stabilizer, g, images);
  return StabilizerData{word, std::move(stabilizer), std::move(phi)};
}

std::vector<int> letter_orbits(const SelfSimilarAction& a) {
  std::vector<int> orbit(a.alphabet_size, -1);
  int count = 0;
  for (int x = 0; x < a.alphabet_size; ++x) {
    if (orbit[x] >= 0) continue;
    int id = count++;
    std::vector<int> stack{x};
    orbit[x] = id;
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      for (int gi = 0; gi < a.group->order(); ++gi) {
        int z = a.act[gi][y];
        if (orbit[z] < 0) {
          orbit[z] = id;
          stack.push_back(z);
        }
      }
    }
  }
  return orbit;
}

namespace {

std::string word_label(const SelfSimilarAction& a, const std::vector<int>& w) {
  if (w.empty()) return "ε";
  std::string out;
  for (int x : w) out += a.letter(x);
  return out;
}

// Is the action of G on X^n transitive? Flood the orbit of the first word.
bool transitive_at_level(const SelfSimilarAction& a, int n, std::vector<int>* other_orbit) {
  std::vector<int> first(n, 0);
  std::vector<std::vector<int>> seen{first};
  std::vector<std::vector<int>> stack{first};
  while (!stack.empty()) {
    auto w = stack.back();
    stack.pop_back();
    for (int gi = 0; gi < a.group->order(); ++gi) {
      auto v = act_word(a, gi, w);
      if (std::find(seen.begin(), seen.end(), v) == seen.end()) {
        seen.push_back(v);
        stack.push_back(v);
      }
    }
  }
  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) total *= a.alphabet_size;
  if (static_cast<std::int64_t>(seen.size()) == total) return true;
  if (other_orbit) {
    // find a word outside the orbit
    std::vector<int> w(n, 0);
    while (true) {
      if (std::find(seen.begin(), seen.end(), w) == seen.end()) {
        *other_orbit = w;
        break;
      }
      int i = n - 1;
      while (i >= 0 && w[i] == a.alphabet_size - 1) w[i--] = 0;
      if (i < 0) break;
      ++w[i];
    }
  }
  return false;
}

}  // namespace

PropertyReport property_report(const SelfSimilarAction& a, int depth) {
  const auto& g = a.group;
  PropertyReport rep;
  rep.depth = depth;
  rep.basis_size = a.alphabet_size;

  auto orbits = letter_orbits(a);
  rep.orbit_count = orbits.empty() ? 0 : *std::max_element(orbits.begin(), orbits.end()) + 1;
  rep.maximal_principal_ideal_count = rep.orbit_count;
  rep.irreducible = rep.orbit_count == 1;
  if (!rep.irreducible) {
    for (int x = 1; x < a.alphabet_size; ++x) {
      if (orbits[x] != orbits[0]) {
        rep.witnesses["irreducible"] =
            "letters " + a.letter(0) + " and " + a.letter(x) + " lie in different orbits";
        break;
      }
    }
  }

  rep.trivial_action = true;
  for (int gi = 0; gi < g->order() && rep.trivial_action; ++gi) {
    for (int x = 0; x < a.alphabet_size; ++x) {
      if (a.act[gi][x] != x) {
        rep.trivial_action = false;
        rep.witnesses["trivial_action"] = g->label(gi) + "." + a.letter(x) + " = " +
                                          a.letter(a.act[gi][x]);
        break;
      }
    }
  }

  // Right cancellativity: phi_x injective at letters lifts to all words.
  rep.right_cancellative = true;
  for (int x = 0; x < a.alphabet_size && rep.right_cancellative; ++x) {
    for (int g1 = 0; g1 < g->order() && rep.right_cancellative; ++g1) {
      if (a.act[g1][x] != x) continue;
      for (int g2 = g1 + 1; g2 < g->order(); ++g2) {
        if (a.act[g2][x] != x) continue;
        if (a.res[g1][x] == a.res[g2][x]) {
          rep.right_cancellative = false;
          rep.witnesses["right_cancellative"] = "phi_" + a.letter(x) + "(" + g->label(g1) +
                                                ") = phi_" + a.letter(x) + "(" + g->label(g2) +
                                                ")";
          break;
        }
      }
    }
  }
  rep.cancellative = rep.right_cancellative;

  // Left symmetry: g -> g|_x bijective on G for every letter.
  rep.left_symmetric = true;
  for (int x = 0; x < a.alphabet_size && rep.left_symmetric; ++x) {
    std::vector<char> hit(g->order(), 0);
    for (int gi = 0; gi < g->order(); ++gi) hit[a.res[gi][x]] = 1;
    for (int v = 0; v < g->order(); ++v) {
      if (!hit[v]) {
        rep.left_symmetric = false;
        rep.witnesses["left_symmetric"] =
            "no g restricts to " + g->label(v) + " at letter " + a.letter(x);
        break;
      }
    }
  }

  // Recurrence: transitive on letters and phi_x onto at letters.
  rep.recurrent = rep.irreducible;
  if (!rep.irreducible) rep.witnesses["recurrent"] = "action is not transitive on letters";
  for (int x = 0; x < a.alphabet_size && rep.recurrent; ++x) {
    std::vector<char> hit(g->order(), 0);
    for (int gi = 0; gi < g->order(); ++gi)
      if (a.act[gi][x] == x) hit[a.res[gi][x]] = 1;
    for (int v = 0; v < g->order(); ++v) {
      if (!hit[v]) {
        rep.recurrent = false;
        rep.witnesses["recurrent"] =
            "phi_" + a.letter(x) + " misses " + g->label(v);
        break;
      }
    }
  }
  rep.right_reversible = rep.recurrent;

  rep.level_transitive = true;
  for (int n = 1; n <= depth && rep.level_transitive; ++n) {
    std::vector<int> other;
    if (!transitive_at_level(a, n, &other)) {
      rep.level_transitive = false;
      rep.witnesses["level_transitive"] =
          "level " + std::to_string(n) + ": " + word_label(a, std::vector<int>(n, 0)) + " and " +
          word_label(a, other) + " lie in different orbits";
    }
  }
  rep.level_transitive_proven =
      rep.level_transitive && (rep.recurrent || a.alphabet_size == 1);
  if (rep.level_transitive && !rep.level_transitive_proven)
    rep.witnesses["level_transitive"] = "verified to depth " + std::to_string(depth) + " only";

  rep.kernel_size = kernel(a).size();
  rep.fundamental = rep.kernel_size == 1;
  return rep;
}

Subgroup kernel(const SelfSimilarAction& a) {
  const auto& g = a.group;
  std::vector<char> member(g->order(), 0);
  // N_0 = pointwise stabilizer of the letters.
  for (int gi = 0; gi < g->order(); ++gi) {
    bool fixes = true;
    for (int x = 0; x < a.alphabet_size && fixes; ++x) fixes = a.act[gi][x] == x;
    member[gi] = fixes;
  }
  // Greatest fixed point of N -> {g in N : g|_x in N for all letters}.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int gi = 0; gi < g->order(); ++gi) {
      if (!member[gi]) continue;
      for (int x = 0; x < a.alphabet_size; ++x) {
        if (!member[a.res[gi][x]]) {
          member[gi] = 0;
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<int> elems;
  for (int gi = 0; gi < g->order(); ++gi)
    if (member[gi]) elems.push_back(gi);
  return Subgroup(g, elems);
}

FundamentalQuotient fundamental_quotient(const SelfSimilarAction& a) {
  auto k = kernel(a);
  auto q = quotient_group(a.group, k);
  const int qn = q.group->order();
  SelfSimilarAction out;
  out.group = q.group;
  out.alphabet_size = a.alphabet_size;
  out.letters = a.letters;
  out.name = a.name.empty() ? "" : a.name + "/K";
  out.act.assign(qn, std::vector<int>(a.alphabet_size, -1));
  out.res.assign(qn, std::vector<int>(a.alphabet_size, -1));
  for (int gi = 0; gi < a.group->order(); ++gi) {
    int c = q.projection[gi];
    for (int x = 0; x < a.alphabet_size; ++x) {
      int act_val = a.act[gi][x];
      int res_val = q.projection[a.res[gi][x]];
      if (out.act[c][x] < 0) {
        out.act[c][x] = act_val;
        out.res[c][x] = res_val;
      } else if (out.act[c][x] != act_val || out.res[c][x] != res_val) {
        fail(ErrorCode::QuotientIllDefined,
             "coset representatives disagree at (" + a.group->label(gi) + "," + a.letter(x) +
                 ") (bug signal)");
      }
    }
  }
  require_valid(out, 2);
  return FundamentalQuotient{std::move(out), std::move(q)};
}

Subgroup schutzenberger(const SelfSimilarAction& a, const ReesElement& e) {
  const auto& g = a.group;
  auto stab = stabilizer_data(a, e.word);
  std::vector<int> elems;
  for (int k : stab.stabilizer.elements())
    elems.push_back(g->conj(stab.phi.apply(k), e.unit));
  return Subgroup(g, elems);
}

std::vector<Component> components(const SelfSimilarAction& a) {
  auto orbit = letter_orbits(a);
  int count = orbit.empty() ? 0 : *std::max_element(orbit.begin(), orbit.end()) + 1;
  std::vector<Component> out(count);
  for (int x = 0; x < a.alphabet_size; ++x) out[orbit[x]].letters.push_back(x);
  for (int c = 0; c < count; ++c) {
    const auto& letters = out[c].letters;
    std::vector<int> local(a.alphabet_size, -1);
    for (size_t i = 0; i < letters.size(); ++i) local[letters[i]] = static_cast<int>(i);
    SelfSimilarAction sub;
    sub.group = a.group;
    sub.alphabet_size = static_cast<int>(letters.size());
    sub.act.assign(a.group->order(), std::vector<int>(letters.size()));
    sub.res.assign(a.group->order(), std::vector<int>(letters.size()));
    for (int gi = 0; gi < a.group->order(); ++gi) {
      for (size_t i = 0; i < letters.size(); ++i) {
        sub.act[gi][i] = local[a.act[gi][letters[i]]];
        sub.res[gi][i] = a.res[gi][letters[i]];
      }
    }
    for (int x : letters) sub.letters.push_back(a.letter(x));
    sub.name = a.name.empty() ? "" : a.name + ":S" + std::to_string(c + 1);
    out[c].action = std::move(sub);
  }
  return out;
}

BourbakiFactorization bourbaki_factor(const SelfSimilarAction& a, const ReesElement& e) {
  auto orbit = letter_orbits(a);
  BourbakiFactorization out;
  out.unit = e.unit;
  for (int x : e.word) {
    if (out.runs.empty() || out.runs.back().component != orbit[x]) {
      out.runs.push_back(BourbakiRun{orbit[x], {}});
    }
    out.runs.back().letters.push_back(x);
  }
  return out;
}

}  // namespace levi
