#include "levi/bimodule.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace levi {

BimodulePtr Bimodule::from_tables(GroupPtr group, int carrier_size,
                                  const std::vector<std::vector<int>>& left,
                                  const std::vector<std::vector<int>>& right,
                                  std::vector<std::string> labels, std::string name) {
  if (!group) fail(ErrorCode::BadIndex, "bimodule over null group");
  if (carrier_size <= 0)
    fail(ErrorCode::DegenerateCarrier, "carrier must contain at least one atom");
  const int n = group->order();
  auto shape_check = [&](const std::vector<std::vector<int>>& t, int rows, int cols,
                         const char* which) {
    if (static_cast<int>(t.size()) != rows)
      fail(ErrorCode::BadIndex, std::string(which) + " table has wrong row count");
    for (const auto& row : t) {
      if (static_cast<int>(row.size()) != cols)
        fail(ErrorCode::BadIndex, std::string(which) + " table has wrong column count");
      for (int v : row)
        if (v < 0 || v >= carrier_size)
          fail(ErrorCode::BadIndex, std::string(which) + " table entry out of range");
    }
  };
  shape_check(left, n, carrier_size, "left");
  shape_check(right, carrier_size, n, "right");

  auto b = std::shared_ptr<Bimodule>(new Bimodule());
  b->group_ = std::move(group);
  b->carrier_size_ = carrier_size;
  b->left_.resize(static_cast<size_t>(n) * carrier_size);
  b->right_.resize(static_cast<size_t>(carrier_size) * n);
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < carrier_size; ++x) b->left_[static_cast<size_t>(g) * carrier_size + x] = left[g][x];
  for (int x = 0; x < carrier_size; ++x)
    for (int g = 0; g < n; ++g) b->right_[static_cast<size_t>(x) * n + g] = right[x][g];

  const auto& gp = b->group_;
  const int e = gp->identity();
  for (int x = 0; x < carrier_size; ++x) {
    if (b->left(e, x) != x)
      fail(ErrorCode::AxiomViolation, "left action: 1*x != x at " + std::to_string(x));
    if (b->right(x, e) != x)
      fail(ErrorCode::AxiomViolation, "right action: x*1 != x at " + std::to_string(x));
  }
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      int gh = gp->mul(g, h);
      for (int x = 0; x < carrier_size; ++x) {
        if (b->left(gh, x) != b->left(g, b->left(h, x)))
          fail(ErrorCode::AxiomViolation,
               "left action law fails at (" + gp->label(g) + "," + gp->label(h) + "," +
                   std::to_string(x) + ")");
        if (b->right(x, gh) != b->right(b->right(x, g), h))
          fail(ErrorCode::AxiomViolation,
               "right action law fails at (" + std::to_string(x) + "," + gp->label(g) + "," +
                   gp->label(h) + ")");
        if (b->right(b->left(g, x), h) != b->left(g, b->right(x, h)))
          fail(ErrorCode::AxiomViolation,
               "actions not conformable at (" + gp->label(g) + "," + std::to_string(x) + "," +
                   gp->label(h) + ")");
      }
    }
  }

  if (labels.empty()) {
    for (int x = 0; x < carrier_size; ++x) b->labels_.push_back("x" + std::to_string(x));
  } else if (static_cast<int>(labels.size()) != carrier_size) {
    fail(ErrorCode::ParseError, "label count does not match carrier size");
  } else {
    b->labels_ = std::move(labels);
  }
  b->name_ = std::move(name);
  return b;
}

std::optional<int> Bimodule::index_of(std::string_view label) const {
  for (int x = 0; x < carrier_size_; ++x)
    if (labels_[x] == label) return x;
  return std::nullopt;
}

GroupData GroupData::make(GroupPtr group, Subgroup h, Subgroup k,
                          std::vector<std::pair<int, int>> gamma) {
  if (!group || h.parent() != group || k.parent() != group)
    fail(ErrorCode::GroupMismatch, "group data parts disagree about the group");
  std::sort(gamma.begin(), gamma.end());
  gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
  const int e = group->identity();
  std::map<std::pair<int, int>, bool> member;
  for (auto [a, b] : gamma) {
    if (!h.contains(a) || !k.contains(b))
      fail(ErrorCode::NotASubgroup, "gamma pair outside H x K");
    member[{a, b}] = true;
  }
  if (!member.count({e, e})) fail(ErrorCode::NotASubgroup, "gamma misses (1,1)");
  for (auto [a, b] : gamma) {
    if (!member.count({group->inv(a), group->inv(b)}))
      fail(ErrorCode::NotASubgroup, "gamma not closed under inverse");
    for (auto [c, d] : gamma) {
      if (!member.count({group->mul(a, c), group->mul(b, d)}))
        fail(ErrorCode::NotASubgroup, "gamma not closed under product");
    }
  }
  std::vector<char> h_hit(group->order(), 0), k_hit(group->order(), 0);
  for (auto [a, b] : gamma) {
    h_hit[a] = 1;
    k_hit[b] = 1;
  }
  for (int a : h.elements())
    if (!h_hit[a]) fail(ErrorCode::NotASubgroup, "gamma does not project onto H");
  for (int b : k.elements())
    if (!k_hit[b]) fail(ErrorCode::NotASubgroup, "gamma does not project onto K");

  return GroupData{std::move(group), std::move(h), std::move(k), std::move(gamma)};
}

GroupData GroupData::graph_of(const PartialHom& phi) {
  std::vector<std::pair<int, int>> gamma;
  for (int a : phi.domain().elements()) gamma.emplace_back(a, phi.apply(a));
  return make(phi.domain().parent(), phi.domain(), phi.image(), std::move(gamma));
}

GroupData GroupData::full_product(const Subgroup& h, const Subgroup& k) {
  std::vector<std::pair<int, int>> gamma;
  for (int a : h.elements())
    for (int b : k.elements()) gamma.emplace_back(a, b);
  return make(h.parent(), h, k, std::move(gamma));
}

bool GroupData::gamma_contains(int a, int b) const {
  return std::binary_search(gamma.begin(), gamma.end(), std::pair{a, b});
}

bool GroupData::gamma_functional() const {
  return static_cast<int>(gamma.size()) == h.size();
}

PartialHom GroupData::gamma_as_hom() const {
  if (!gamma_functional())
    fail(ErrorCode::GammaNotFunctional, "gamma is not the graph of a function");
  std::vector<int> images;
  for (int a : h.elements()) {
    for (auto [x, y] : gamma) {
      if (x == a) {
        images.push_back(y);
        break;
      }
    }
  }
  return PartialHom(h, group, images);
}

PointedBimodule from_group_data(const GroupData& data) {
  const auto& g = data.group;
  const int n = g->order();
  // class of (g1,h1) = {(g1 a^-1, b h1) : (a,b) in gamma}; representative =
  // lexicographically minimal pair.
  std::vector<int> class_of(static_cast<size_t>(n) * n, -1);
  std::vector<std::pair<int, int>> reps;
  for (int g1 = 0; g1 < n; ++g1) {
    for (int h1 = 0; h1 < n; ++h1) {
      if (class_of[static_cast<size_t>(g1) * n + h1] >= 0) continue;
      int id = static_cast<int>(reps.size());
      std::pair<int, int> rep{g1, h1};
      for (auto [a, b] : data.gamma) {
        int g2 = g->mul(g1, g->inv(a));
        int h2 = g->mul(b, h1);
        class_of[static_cast<size_t>(g2) * n + h2] = id;
        rep = std::min(rep, {g2, h2});
      }
      reps.push_back(rep);
    }
  }
  const int carrier = static_cast<int>(reps.size());

  std::vector<std::vector<int>> left(n, std::vector<int>(carrier));
  std::vector<std::vector<int>> right(carrier, std::vector<int>(n));
  for (int c = 0; c < carrier; ++c) {
    auto [g1, h1] = reps[c];
    for (int u = 0; u < n; ++u) {
      left[u][c] = class_of[static_cast<size_t>(g->mul(u, g1)) * n + h1];
      right[c][u] = class_of[static_cast<size_t>(g1) * n + g->mul(h1, u)];
    }
  }
  std::vector<std::string> labels;
  for (auto [g1, h1] : reps) labels.push_back("[" + g->label(g1) + "," + g->label(h1) + "]");

  PointedBimodule out;
  out.bimodule = Bimodule::from_tables(g, carrier, left, right, std::move(labels));
  out.point = class_of[static_cast<size_t>(g->identity()) * n + g->identity()];
  return out;
}

GroupData extract_group_data(const PointedBimodule& pb) {
  const auto& b = *pb.bimodule;
  const auto& g = b.group();
  if (!b.valid_point(pb.point)) fail(ErrorCode::BadIndex, "point outside the carrier");
  const int x = pb.point;
  std::vector<int> h_elems, k_elems;
  std::vector<std::pair<int, int>> gamma;
  for (int a = 0; a < g->order(); ++a) {
    bool in_h = false, in_k = false;
    for (int c = 0; c < g->order(); ++c) {
      if (b.left(a, x) == b.right(x, c)) in_h = true;
      if (b.right(x, a) == b.left(c, x)) in_k = true;
    }
    if (in_h) h_elems.push_back(a);
    if (in_k) k_elems.push_back(a);
  }
  for (int a : h_elems)
    for (int c : k_elems)
      if (b.left(a, x) == b.right(x, c)) gamma.emplace_back(a, c);
  return GroupData::make(g, Subgroup(g, h_elems), Subgroup(g, k_elems), std::move(gamma));
}

std::optional<std::pair<int, int>> conjugate_group_data(const GroupData& d1,
                                                        const GroupData& d2) {
  if (d1.group != d2.group) fail(ErrorCode::GroupMismatch, "group data over different groups");
  const auto& g = d1.group;
  if (d1.h.size() != d2.h.size() || d1.k.size() != d2.k.size() ||
      d1.gamma.size() != d2.gamma.size())
    return std::nullopt;
  for (int a = 0; a < g->order(); ++a) {
    bool h_ok = true;
    for (int x : d1.h.elements())
      if (!d2.h.contains(g->conj(x, a))) { h_ok = false; break; }
    if (!h_ok) continue;
    for (int b = 0; b < g->order(); ++b) {
      bool k_ok = true;
      for (int x : d1.k.elements())
        if (!d2.k.contains(g->conj(x, b))) { k_ok = false; break; }
      if (!k_ok) continue;
      bool gamma_ok = true;
      for (auto [x, y] : d1.gamma)
        if (!d2.gamma_contains(g->conj(x, a), g->conj(y, b))) { gamma_ok = false; break; }
      if (gamma_ok) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

GoursatForm goursat_form(const GroupData& data) {
  const auto& g = data.group;
  const int e = g->identity();
  std::vector<int> nh, nk;
  for (auto [a, b] : data.gamma) {
    if (b == e) nh.push_back(a);
    if (a == e) nk.push_back(b);
  }
  GoursatForm out;
  out.n_h = Subgroup(g, nh);
  out.n_k = Subgroup(g, nk);

  // Normality inside H and K respectively.
  for (int h : data.h.elements())
    for (int x : out.n_h.elements())
      if (!out.n_h.contains(g->conj(x, h)))
        fail(ErrorCode::NotNormal, "N_H not normal in H");  // cannot happen for valid data
  for (int k : data.k.elements())
    for (int x : out.n_k.elements())
      if (!out.n_k.contains(g->conj(x, k))) fail(ErrorCode::NotNormal, "N_K not normal in K");

  // Coset transversals inside H and K (minimal representative per coset).
  auto transversal_in = [&](const Subgroup& sub, const Subgroup& nrm, std::vector<int>& coset_of) {
    std::vector<int> reps;
    coset_of.assign(g->order(), -1);
    for (int a : sub.elements()) {
      if (coset_of[a] >= 0) continue;
      int idx = static_cast<int>(reps.size());
      reps.push_back(a);
      for (int x : nrm.elements()) coset_of[g->mul(a, x)] = idx;
    }
    return reps;
  };
  std::vector<int> h_coset_of, k_coset_of;
  out.h_reps = transversal_in(data.h, out.n_h, h_coset_of);
  out.k_reps = transversal_in(data.k, out.n_k, k_coset_of);

  out.theta.assign(out.h_reps.size(), -1);
  for (auto [a, b] : data.gamma) {
    int i = h_coset_of[a];
    int j = k_coset_of[b];
    if (out.theta[i] >= 0 && out.theta[i] != j)
      fail(ErrorCode::NotAHomomorphism, "gamma is not graph-like modulo (N_H, N_K)");
    out.theta[i] = j;
  }
  // Isomorphism of the quotients: theta is a bijection and multiplicative
  // modulo N_K.
  std::vector<char> hit(out.k_reps.size(), 0);
  for (size_t i = 0; i < out.theta.size(); ++i) {
    if (out.theta[i] < 0) fail(ErrorCode::NotAHomomorphism, "theta undefined on a coset");
    if (hit[out.theta[i]]++) fail(ErrorCode::NotAHomomorphism, "theta is not injective");
  }
  if (out.h_reps.size() != out.k_reps.size())
    fail(ErrorCode::NotAHomomorphism, "quotients have different sizes");
  for (size_t i = 0; i < out.h_reps.size(); ++i) {
    for (size_t j = 0; j < out.h_reps.size(); ++j) {
      int prod = g->mul(out.h_reps[i], out.h_reps[j]);
      int expect = k_coset_of[g->mul(out.k_reps[out.theta[i]], out.k_reps[out.theta[j]])];
      if (out.theta[h_coset_of[prod]] != expect)
        fail(ErrorCode::NotAHomomorphism, "theta not multiplicative modulo N_K");
    }
  }
  return out;
}

BimoduleClassification classify(const Bimodule& b) {
  const auto& g = b.group();
  const int e = g->identity();
  BimoduleClassification out;
  out.right_free = true;
  out.left_free = true;
  for (int x = 0; x < b.carrier_size(); ++x) {
    for (int a = 0; a < g->order(); ++a) {
      if (a == e) continue;
      if (b.right(x, a) == x) out.right_free = false;
      if (b.left(a, x) == x) out.left_free = false;
    }
  }
  out.bifree = out.right_free && out.left_free;

  // Two-sided orbits by flood fill.
  std::vector<int> orbit(b.carrier_size(), -1);
  for (int x = 0; x < b.carrier_size(); ++x) {
    if (orbit[x] >= 0) continue;
    int id = out.orbit_count++;
    std::vector<int> stack{x};
    orbit[x] = id;
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      for (int a = 0; a < g->order(); ++a) {
        for (int z : {b.left(a, y), b.right(y, a)}) {
          if (orbit[z] < 0) {
            orbit[z] = id;
            stack.push_back(z);
          }
        }
      }
    }
  }
  out.irreducible = out.orbit_count == 1;
  return out;
}

std::vector<int> basis_transversal(const Bimodule& b) {
  const auto& g = b.group();
  const int e = g->identity();
  for (int x = 0; x < b.carrier_size(); ++x)
    for (int a = 0; a < g->order(); ++a)
      if (a != e && b.right(x, a) == x)
        fail(ErrorCode::NotRightFree,
             "x*g = x at (" + b.label(x) + "," + g->label(a) + ")");

  std::vector<int> rep_of(b.carrier_size(), -1);
  std::vector<int> basis;
  for (int x = 0; x < b.carrier_size(); ++x) {
    if (rep_of[x] >= 0) continue;
    basis.push_back(x);
    for (int a = 0; a < g->order(); ++a) rep_of[b.right(x, a)] = x;
  }
  return basis;
}

}  // namespace levi
