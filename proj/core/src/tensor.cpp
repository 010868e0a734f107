#include "levi/tensor.hpp"

#include <algorithm>
#include <set>

namespace levi {

namespace {

void require_same(const TensorElement& a, const TensorElement& b) {
  if (a.bimodule() != b.bimodule())
    fail(ErrorCode::BimoduleMismatch, "elements live over different bimodules");
}

// g^{-1} x h in the bimodule.
int sandwich(const Bimodule& b, int g, int x, int h) {
  return b.right(b.left(b.group()->inv(g), x), h);
}

// One interleaver chain transforming xs into ys, or nullopt. Works on raw
// tuples of equal length >= 1.
std::optional<std::vector<int>> chain_between(const Bimodule& b, const std::vector<int>& xs,
                                              const std::vector<int>& ys) {
  const auto& g = b.group();
  const int n = static_cast<int>(xs.size());
  const int order = g->order();
  if (n == 0) return std::vector<int>{};
  if (n == 1) {
    if (xs[0] == ys[0]) return std::vector<int>{};
    return std::nullopt;
  }
  // forward[i][h] = chain value g_{i+1} = h is consistent with ys[0..i].
  std::vector<std::vector<char>> forward(n - 1, std::vector<char>(order, 0));
  for (int h = 0; h < order; ++h)
    forward[0][h] = b.right(xs[0], h) == ys[0];
  for (int i = 1; i + 1 <= n - 1; ++i) {
    for (int prev = 0; prev < order; ++prev) {
      if (!forward[i - 1][prev]) continue;
      for (int h = 0; h < order; ++h)
        if (sandwich(b, prev, xs[i], h) == ys[i]) forward[i][h] = 1;
    }
  }
  std::vector<int> chain(n - 1, -1);
  for (int h = 0; h < order; ++h) {
    if (forward[n - 2][h] && b.left(g->inv(h), xs[n - 1]) == ys[n - 1]) {
      chain[n - 2] = h;
      break;
    }
  }
  if (chain[n - 2] < 0) return std::nullopt;
  for (int i = n - 2; i >= 1; --i) {
    for (int h = 0; h < order; ++h) {
      if (forward[i - 1][h] && sandwich(b, h, xs[i], chain[i]) == ys[i]) {
        chain[i - 1] = h;
        break;
      }
    }
    if (chain[i - 1] < 0) return std::nullopt;  // cannot happen: forward sets are consistent
  }
  return chain;
}

// Lexicographically least tuple reachable by interleaver moves. At each
// position the freedom is a set of possible trailing interleavers; picking
// the minimal letter keeps exactly the interleavers achieving it.
std::vector<int> canonicalize(const Bimodule& b, std::vector<int> raw) {
  const auto& g = b.group();
  const int n = static_cast<int>(raw.size());
  const int order = g->order();
  if (n <= 1) return raw;
  std::vector<char> states(order, 0);
  states[g->identity()] = 1;
  std::vector<int> out(n);
  std::vector<char> next(order, 0);
  for (int i = 0; i < n; ++i) {
    if (i + 1 < n) {
      int best = b.carrier_size();
      for (int prev = 0; prev < order; ++prev) {
        if (!states[prev]) continue;
        int moved = b.left(g->inv(prev), raw[i]);
        for (int h = 0; h < order; ++h) best = std::min(best, b.right(moved, h));
      }
      std::fill(next.begin(), next.end(), 0);
      for (int prev = 0; prev < order; ++prev) {
        if (!states[prev]) continue;
        int moved = b.left(g->inv(prev), raw[i]);
        for (int h = 0; h < order; ++h)
          if (b.right(moved, h) == best) next[h] = 1;
      }
      out[i] = best;
      states.swap(next);
    } else {
      int best = b.carrier_size();
      for (int prev = 0; prev < order; ++prev)
        if (states[prev]) best = std::min(best, b.left(g->inv(prev), raw[i]));
      out[i] = best;
    }
  }
  return out;
}

}  // namespace

TensorElement TensorElement::unit(BimodulePtr b, int g) {
  if (!b) fail(ErrorCode::BadIndex, "null bimodule");
  if (!b->group()->valid_index(g)) fail(ErrorCode::BadIndex, "unit " + std::to_string(g));
  return TensorElement(std::move(b), g, {});
}

TensorElement TensorElement::identity(BimodulePtr b) {
  int e = b->group()->identity();
  return unit(std::move(b), e);
}

TensorElement TensorElement::atom(BimodulePtr b, int x) {
  return word(std::move(b), {x});
}

TensorElement TensorElement::word(BimodulePtr b, std::vector<int> letters) {
  if (!b) fail(ErrorCode::BadIndex, "null bimodule");
  if (letters.empty()) fail(ErrorCode::BadIndex, "empty word; use unit()");
  for (int x : letters)
    if (!b->valid_point(x)) fail(ErrorCode::BadIndex, "carrier index " + std::to_string(x));
  auto canon = canonicalize(*b, std::move(letters));
  return TensorElement(std::move(b), 0, std::move(canon));
}

bool TensorElement::operator<(const TensorElement& other) const {
  if (letters_.size() != other.letters_.size()) return letters_.size() < other.letters_.size();
  if (letters_.empty()) return unit_ < other.unit_;
  return letters_ < other.letters_;
}

std::string TensorElement::to_string() const {
  if (is_unit()) return bimodule_->group()->label(unit_);
  std::string out;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += '*';
    out += bimodule_->label(letters_[i]);
  }
  return out;
}

bool tensor_equal(const TensorElement& a, const TensorElement& b) {
  require_same(a, b);
  return a == b;
}

bool tensor_equal_by_chain(const TensorElement& a, const TensorElement& b) {
  require_same(a, b);
  if (a.length() != b.length()) return false;
  if (a.is_unit()) return a.unit_value() == b.unit_value();
  return chain_between(*a.bimodule(), a.letters(), b.letters()).has_value();
}

std::optional<std::vector<int>> interleaver_chain(const TensorElement& a,
                                                  const TensorElement& b) {
  require_same(a, b);
  if (a.length() != b.length()) return std::nullopt;
  if (a.is_unit()) {
    if (a.unit_value() == b.unit_value()) return std::vector<int>{};
    return std::nullopt;
  }
  return chain_between(*a.bimodule(), a.letters(), b.letters());
}

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) {
  require_same(a, b);
  const auto& bim = a.bimodule();
  const auto& g = bim->group();
  if (a.is_unit() && b.is_unit())
    return TensorElement::unit(bim, g->mul(a.unit_value(), b.unit_value()));
  if (a.is_unit()) {
    auto letters = b.letters();
    letters[0] = bim->left(a.unit_value(), letters[0]);
    return TensorElement::word(bim, std::move(letters));
  }
  if (b.is_unit()) {
    auto letters = a.letters();
    letters.back() = bim->right(letters.back(), b.unit_value());
    return TensorElement::word(bim, std::move(letters));
  }
  auto letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return TensorElement::word(bim, std::move(letters));
}

int normalized_length(const TensorElement& a) { return a.length(); }

std::vector<std::vector<TensorElement>> enumerate_elements(const BimodulePtr& b, int max_len) {
  std::vector<std::vector<TensorElement>> out;
  std::vector<TensorElement> units;
  for (int g = 0; g < b->group()->order(); ++g) units.push_back(TensorElement::unit(b, g));
  out.push_back(std::move(units));
  for (int len = 1; len <= max_len; ++len) {
    std::set<TensorElement> level;
    if (len == 1) {
      for (int x = 0; x < b->carrier_size(); ++x) level.insert(TensorElement::atom(b, x));
    } else {
      for (const auto& e : out[len - 1])
        for (int x = 0; x < b->carrier_size(); ++x)
          level.insert(tensor_mul(e, TensorElement::atom(b, x)));
    }
    out.emplace_back(level.begin(), level.end());
  }
  return out;
}

DivisorChainAudit divisor_chain_audit(const TensorElement& a, int max_len) {
  if (a.length() > max_len)
    fail(ErrorCode::BadIndex,
         "divisor-chain audit is capped at length " + std::to_string(max_len));
  return divisor_chain_audit(a, enumerate_elements(a.bimodule(), a.length()));
}

DivisorChainAudit divisor_chain_audit(const TensorElement& a,
                                      const std::vector<std::vector<TensorElement>>& elements) {
  const int n = a.length();
  const auto& bim = a.bimodule();
  const auto& g = bim->group();
  DivisorChainAudit audit;
  audit.divisor_class_count.assign(n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    std::vector<TensorElement> divisors;
    for (const auto& p : elements[k]) {
      bool divides = false;
      for (const auto& s : elements[n - k]) {
        if (tensor_mul(p, s) == a) {
          divides = true;
          break;
        }
      }
      if (divides) divisors.push_back(p);
    }
    // R-classes: p and p' generate the same right ideal iff p' = p * unit.
    std::vector<TensorElement> reps;
    for (const auto& p : divisors) {
      bool seen = false;
      for (const auto& q : reps) {
        for (int u = 0; u < g->order() && !seen; ++u)
          seen = tensor_mul(q, TensorElement::unit(bim, u)) == p;
        if (seen) break;
      }
      if (!seen) reps.push_back(p);
    }
    audit.divisor_class_count[k] = static_cast<int>(reps.size());
  }
  int total = 0;
  for (int c : audit.divisor_class_count) total += c;
  audit.length = total - 1;
  audit.ok = audit.length == n;
  for (int c : audit.divisor_class_count)
    if (c != 1) audit.ok = false;
  return audit;
}

EquidivisionWitness equidivide(const TensorElement& p, const TensorElement& q,
                               const TensorElement& r, const TensorElement& s) {
  require_same(p, q);
  require_same(p, r);
  require_same(p, s);
  auto pq = tensor_mul(p, q);
  if (!(pq == tensor_mul(r, s)))
    fail(ErrorCode::ProductsNotEqual, "pq != rs");

  const auto& bim = p.bimodule();
  const auto& g = bim->group();

  // Left witness for lambda(p) <= lambda(r): u with r = p u and q = u s.
  auto left_witness = [&](const TensorElement& p1, const TensorElement& q1,
                          const TensorElement& r1, const TensorElement& s1) -> TensorElement {
    if (p1.is_unit()) {
      return tensor_mul(TensorElement::unit(bim, g->inv(p1.unit_value())), r1);
    }
    if (p1.length() == r1.length()) {
      for (int u = 0; u < g->order(); ++u) {
        auto unit = TensorElement::unit(bim, u);
        if (tensor_mul(p1, unit) == r1 && tensor_mul(unit, s1) == q1) return unit;
      }
      fail(ErrorCode::WellDefinednessViolation, "no unit witness found (bug signal)");
    }
    if (s1.is_unit()) {
      return tensor_mul(q1, TensorElement::unit(bim, g->inv(s1.unit_value())));
    }
    // General case: both sides are words; read the witness off an
    // interleaver chain between the two factorizations of the product.
    auto xs = p1.letters();
    xs.insert(xs.end(), q1.letters().begin(), q1.letters().end());
    auto ys = r1.letters();
    ys.insert(ys.end(), s1.letters().begin(), s1.letters().end());
    auto chain = chain_between(*bim, xs, ys);
    if (!chain) fail(ErrorCode::WellDefinednessViolation, "no chain between equal products");
    const int m = p1.length();
    const int n = r1.length();
    std::vector<int> letters(xs.begin() + m, xs.begin() + n);
    letters.back() = bim->right(letters.back(), (*chain)[n - 1]);
    return TensorElement::word(bim, std::move(letters));
  };

  if (p.length() <= r.length()) {
    auto u = left_witness(p, q, r, s);
    if (!(tensor_mul(p, u) == r) || !(tensor_mul(u, s) == q))
      fail(ErrorCode::WellDefinednessViolation, "left witness fails revalidation (bug signal)");
    return EquidivisionWitness{true, std::move(u)};
  }
  auto v = left_witness(r, s, p, q);
  if (!(tensor_mul(r, v) == p) || !(tensor_mul(v, q) == s))
    fail(ErrorCode::WellDefinednessViolation, "right witness fails revalidation (bug signal)");
  return EquidivisionWitness{false, std::move(v)};
}

}  // namespace levi
