#include "levi/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace levi {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::OrderLimitExceeded: return "OrderLimitExceeded";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::BimoduleMismatch: return "BimoduleMismatch";
    case ErrorCode::DegenerateCarrier: return "DegenerateCarrier";
    case ErrorCode::NotRightFree: return "NotRightFree";
    case ErrorCode::NotATransversal: return "NotATransversal";
    case ErrorCode::GammaNotFunctional: return "GammaNotFunctional";
    case ErrorCode::ProductsNotEqual: return "ProductsNotEqual";
    case ErrorCode::NotAMorphism: return "NotAMorphism";
    case ErrorCode::WellDefinednessViolation: return "WellDefinednessViolation";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::NotEndomorphism: return "NotEndomorphism";
    case ErrorCode::QuotientIllDefined: return "QuotientIllDefined";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::InverseLetterWithoutAutomorphism: return "InverseLetterWithoutAutomorphism";
    case ErrorCode::SyllableLimitExceeded: return "SyllableLimitExceeded";
    case ErrorCode::MixedGroups: return "MixedGroups";
    case ErrorCode::NotLeftSymmetric: return "NotLeftSymmetric";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownName: return "UnknownName";
  }
  return "Error";
}

namespace {

std::string cycle_notation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || perm[i] == i) continue;
    any = true;
    out << '(';
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      out << j;
      j = perm[j];
    }
    out << ')';
  }
  if (!any) return "e";
  return out.str();
}

// Greedy generating set: repeatedly add the smallest element outside the
// closure so far.
std::vector<int> generating_set(const std::vector<int>& mul, int n, int identity) {
  std::vector<int> gens;
  std::vector<char> in_closure(n, 0);
  in_closure[identity] = 1;
  int covered = 1;
  while (covered < n) {
    int fresh = -1;
    for (int g = 0; g < n; ++g) {
      if (!in_closure[g]) { fresh = g; break; }
    }
    gens.push_back(fresh);
    std::deque<int> queue;
    queue.push_back(fresh);
    in_closure[fresh] = 1;
    ++covered;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int g = 0; g < n && covered < n; ++g) {
        if (!in_closure[g]) continue;
        for (int y : {mul[static_cast<size_t>(x) * n + g], mul[static_cast<size_t>(g) * n + x]}) {
          if (!in_closure[y]) {
            in_closure[y] = 1;
            ++covered;
            queue.push_back(y);
          }
        }
      }
    }
  }
  return gens;
}

}  // namespace

GroupPtr FiniteGroup::from_mul_table(const std::vector<std::vector<int>>& table,
                                     std::vector<std::string> labels,
                                     std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail(ErrorCode::NotLatinSquare, "empty table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      fail(ErrorCode::NotLatinSquare, "row " + std::to_string(i) + " has wrong length");
    for (int j = 0; j < n; ++j) {
      if (table[i][j] < 0 || table[i][j] >= n)
        fail(ErrorCode::NotLatinSquare,
             "entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    }
  }
  // Latin square: each row and column is a permutation.
  for (int i = 0; i < n; ++i) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (int j = 0; j < n; ++j) {
      if (row_seen[table[i][j]]++)
        fail(ErrorCode::NotLatinSquare, "row " + std::to_string(i) + " repeats a value");
      if (col_seen[table[j][i]]++)
        fail(ErrorCode::NotLatinSquare, "column " + std::to_string(i) + " repeats a value");
    }
  }
  // Two-sided identity.
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) { identity = e; break; }
  }
  if (identity < 0) fail(ErrorCode::NoIdentity, "no two-sided identity element");

  auto flat = std::vector<int>(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[static_cast<size_t>(i) * n + j] = table[i][j];

  auto check = [&](int a, int b, int c) {
    int ab_c = flat[static_cast<size_t>(flat[static_cast<size_t>(a) * n + b]) * n + c];
    int a_bc = flat[static_cast<size_t>(a) * n + flat[static_cast<size_t>(b) * n + c]];
    if (ab_c != a_bc)
      fail(ErrorCode::NotAssociative,
           "witness (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
  };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    // Light's associativity test over a generating set.
    for (int g : generating_set(flat, n, identity))
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) check(a, g, b);
  }

  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->order_ = n;
  group->identity_ = identity;
  group->mul_ = std::move(flat);
  group->table_ = table;
  group->inv_.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (group->mul(g, h) == identity) {
        group->inv_[g] = h;
        break;
      }
    }
    if (group->mul(group->inv_[g], g) != identity)
      fail(ErrorCode::NotAssociative, "one-sided inverse at element " + std::to_string(g));
  }
  if (labels.empty()) {
    for (int g = 0; g < n; ++g) labels.push_back(g == identity ? "e" : "g" + std::to_string(g));
  } else if (static_cast<int>(labels.size()) != n) {
    fail(ErrorCode::ParseError, "label count does not match group order");
  }
  group->labels_ = std::move(labels);
  group->name_ = std::move(name);
  return group;
}

GroupPtr FiniteGroup::from_permutations(int degree,
                                        const std::vector<std::vector<int>>& generators,
                                        int order_limit, std::string name) {
  if (degree <= 0) fail(ErrorCode::NotAPermutation, "degree must be positive");
  for (const auto& gen : generators) {
    if (static_cast<int>(gen.size()) != degree)
      fail(ErrorCode::NotAPermutation, "generator has wrong degree");
    std::vector<char> seen(degree, 0);
    for (int v : gen) {
      if (v < 0 || v >= degree || seen[v]++)
        fail(ErrorCode::NotAPermutation, "generator is not a permutation of the points");
    }
  }

  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  auto compose = [degree](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(degree);
    for (int i = 0; i < degree; ++i) r[i] = p[q[i]];
    return r;
  };
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gen : generators) {
      auto next = compose(elems[head], gen);
      if (index.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (static_cast<int>(elems.size()) > order_limit)
          fail(ErrorCode::OrderLimitExceeded,
               "closure exceeds " + std::to_string(order_limit) + " elements");
      }
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));

  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elems) labels.push_back(cycle_notation(p));
  return from_mul_table(table, std::move(labels), std::move(name));
}

GroupPtr FiniteGroup::trivial() { return from_mul_table({{0}}, {"e"}, "trivial"); }

GroupPtr FiniteGroup::cyclic(int n, std::string name) {
  if (n <= 0) fail(ErrorCode::BadIndex, "cyclic group order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    labels.push_back(i == 0 ? "e" : (i == 1 ? "r" : "r" + std::to_string(i)));
  if (name.empty()) name = "C" + std::to_string(n);
  return from_mul_table(table, std::move(labels), std::move(name));
}

GroupPtr FiniteGroup::symmetric(int n) {
  if (n <= 1) return trivial();
  std::vector<int> transposition(n), cycle(n);
  std::iota(transposition.begin(), transposition.end(), 0);
  std::swap(transposition[0], transposition[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return from_permutations(n, {transposition, cycle}, 10080, "S" + std::to_string(n));
}

int FiniteGroup::element_order(int a) const {
  if (!valid_index(a)) fail(ErrorCode::BadIndex, "element " + std::to_string(a));
  int k = 1, x = a;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

std::optional<int> FiniteGroup::index_of(std::string_view label) const {
  for (int g = 0; g < order_; ++g)
    if (labels_[g] == label) return g;
  return std::nullopt;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elements) : parent_(std::move(parent)) {
  if (!parent_) fail(ErrorCode::BadIndex, "subgroup of null group");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  member_.assign(parent_->order(), 0);
  for (int g : elements) {
    if (!parent_->valid_index(g)) fail(ErrorCode::BadIndex, "element " + std::to_string(g));
    member_[g] = 1;
  }
  if (!member_[parent_->identity()]) fail(ErrorCode::NotASubgroup, "missing the identity");
  for (int a : elements) {
    if (!member_[parent_->inv(a)])
      fail(ErrorCode::NotASubgroup, "not closed under inverse at " + parent_->label(a));
    for (int b : elements) {
      if (!member_[parent_->mul(a, b)])
        fail(ErrorCode::NotASubgroup,
             "not closed under product at (" + parent_->label(a) + "," + parent_->label(b) + ")");
    }
  }
  elements_ = std::move(elements);
}

Subgroup Subgroup::closure(GroupPtr group, const std::vector<int>& seeds) {
  if (!group) fail(ErrorCode::BadIndex, "closure in null group");
  for (int g : seeds)
    if (!group->valid_index(g)) fail(ErrorCode::BadIndex, "seed " + std::to_string(g));
  std::vector<char> member(group->order(), 0);
  std::vector<int> stack{group->identity()};
  member[group->identity()] = 1;
  for (int g : seeds) {
    if (!member[g]) {
      member[g] = 1;
      stack.push_back(g);
    }
  }
  std::vector<int> all(stack);
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (size_t i = 0; i < all.size(); ++i) {
      for (int y : {group->mul(x, all[i]), group->mul(all[i], x), group->inv(x)}) {
        if (!member[y]) {
          member[y] = 1;
          stack.push_back(y);
          all.push_back(y);
        }
      }
    }
  }
  return Subgroup(std::move(group), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr group) {
  int e = group->identity();
  return Subgroup(std::move(group), {e});
}

Subgroup Subgroup::whole(GroupPtr group) {
  std::vector<int> all(group->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(std::move(group), std::move(all));
}

bool Subgroup::is_normal() const {
  for (int g = 0; g < parent_->order(); ++g)
    for (int h : elements_)
      if (!contains(parent_->conj(h, g))) return false;
  return true;
}

CosetDecomposition left_cosets(const GroupPtr& group, const Subgroup& h) {
  if (h.parent() != group) fail(ErrorCode::GroupMismatch, "subgroup of a different group");
  const int n = group->order();
  CosetDecomposition out;
  out.coset_of.assign(n, -1);
  out.h_part.assign(n, -1);

  // Identity coset first, represented by the identity.
  auto assign = [&](int rep) {
    int idx = static_cast<int>(out.transversal.size());
    out.transversal.push_back(rep);
    for (int x : h.elements()) {
      int g = group->mul(rep, x);
      out.coset_of[g] = idx;
      out.h_part[g] = x;
    }
  };
  assign(group->identity());
  for (int g = 0; g < n; ++g) {
    if (out.coset_of[g] < 0) assign(g);  // minimal untouched index represents its coset
  }
  return out;
}

PartialHom::PartialHom(Subgroup domain, GroupPtr codomain, const std::vector<int>& images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  if (static_cast<int>(images.size()) != domain_.size())
    fail(ErrorCode::NotAHomomorphism, "image list does not match domain size");
  map_.assign(domain_.parent()->order(), -1);
  for (int i = 0; i < domain_.size(); ++i) {
    int b = images[i];
    if (!codomain_->valid_index(b)) fail(ErrorCode::BadIndex, "image " + std::to_string(b));
    map_[domain_.elements()[i]] = b;
  }
  const auto& g = domain_.parent();
  for (int a1 : domain_.elements()) {
    for (int a2 : domain_.elements()) {
      if (map_[g->mul(a1, a2)] != codomain_->mul(map_[a1], map_[a2]))
        fail(ErrorCode::NotAHomomorphism,
             "witness pair (" + g->label(a1) + "," + g->label(a2) + ")");
    }
  }
  std::vector<int> image_elems;
  for (int a : domain_.elements()) image_elems.push_back(map_[a]);
  image_ = Subgroup(codomain_, image_elems);
  injective_ = image_.size() == domain_.size();
}

PartialHom PartialHom::from_generators(const Subgroup& domain, GroupPtr codomain,
                                       const std::vector<std::pair<int, int>>& gen_images) {
  const auto& g = domain.parent();
  std::vector<int> map(g->order(), -1);
  map[g->identity()] = codomain->identity();
  std::vector<int> known{g->identity()};
  for (auto [a, b] : gen_images) {
    if (!domain.contains(a)) fail(ErrorCode::BadIndex, "generator outside the domain");
    if (!codomain->valid_index(b)) fail(ErrorCode::BadIndex, "image out of range");
    if (map[a] >= 0 && map[a] != b)
      fail(ErrorCode::NotAHomomorphism, "conflicting images for " + g->label(a));
    if (map[a] < 0) {
      map[a] = b;
      known.push_back(a);
    }
  }
  // Multiplicative closure of the partial map.
  for (size_t head = 0; head < known.size(); ++head) {
    for (size_t i = 0; i < known.size(); ++i) {
      for (auto [x, y] : {std::pair{known[head], known[i]}, std::pair{known[i], known[head]}}) {
        int prod = g->mul(x, y);
        int img = codomain->mul(map[x], map[y]);
        if (map[prod] < 0) {
          map[prod] = img;
          known.push_back(prod);
        } else if (map[prod] != img) {
          fail(ErrorCode::NotAHomomorphism,
               "witness pair (" + g->label(x) + "," + g->label(y) + ")");
        }
      }
    }
  }
  if (static_cast<int>(known.size()) != domain.size())
    fail(ErrorCode::NotAHomomorphism, "images do not cover a generating set of the domain");
  std::vector<int> images;
  for (int a : domain.elements()) images.push_back(map[a]);
  return PartialHom(domain, std::move(codomain), images);
}

PartialHom PartialHom::identity_on(const Subgroup& s) {
  return PartialHom(s, s.parent(), s.elements());
}

int PartialHom::apply(int a) const {
  if (!domain_.contains(a))
    fail(ErrorCode::BadIndex, "element " + domain_.parent()->label(a) + " outside the domain");
  return map_[a];
}

std::optional<int> PartialHom::preimage(int b) const {
  if (!injective_) return std::nullopt;
  for (int a : domain_.elements())
    if (map_[a] == b) return a;
  return std::nullopt;
}

QuotientGroup quotient_group(const GroupPtr& g, const Subgroup& n) {
  if (n.parent() != g) fail(ErrorCode::GroupMismatch, "subgroup of a different group");
  if (!n.is_normal()) fail(ErrorCode::NotNormal, "subgroup is not normal");
  auto cosets = left_cosets(g, n);
  const int q = static_cast<int>(cosets.transversal.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[i][j] = cosets.coset_of[g->mul(cosets.transversal[i], cosets.transversal[j])];
  std::vector<std::string> labels;
  for (int i = 0; i < q; ++i) labels.push_back(g->label(cosets.transversal[i]) + "N");
  QuotientGroup out;
  out.group = FiniteGroup::from_mul_table(table, std::move(labels), g->name() + "/N");
  out.projection = std::move(cosets.coset_of);
  return out;
}

}  // namespace levi
