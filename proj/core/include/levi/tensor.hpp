#ifndef LEVI_TENSOR_HPP
#define LEVI_TENSOR_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "levi/bimodule.hpp"

namespace levi {

/// Element of the tensor monoid T(X) of a bimodule: either a unit (group
/// element, length 0) or a nonempty word of carrier elements (length n).
/// Words are stored in canonical form: the lexicographically least tuple
/// reachable by interleaver moves x_i g | x_{i+1} -> x_i | g x_{i+1}, so
/// equality of elements is equality of representations.
class TensorElement {
 public:
  static TensorElement unit(BimodulePtr b, int g);
  static TensorElement identity(BimodulePtr b);
  static TensorElement atom(BimodulePtr b, int x);
  static TensorElement word(BimodulePtr b, std::vector<int> letters);

  bool is_unit() const { return letters_.empty(); }
  int unit_value() const { return unit_; }
  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  const BimodulePtr& bimodule() const { return bimodule_; }

  bool operator==(const TensorElement& other) const {
    return unit_ == other.unit_ && letters_ == other.letters_;
  }
  bool operator<(const TensorElement& other) const;

  std::string to_string() const;

 private:
  TensorElement(BimodulePtr b, int unit, std::vector<int> letters)
      : bimodule_(std::move(b)), unit_(unit), letters_(std::move(letters)) {}

  BimodulePtr bimodule_;
  int unit_ = 0;              // meaningful only when letters_ is empty
  std::vector<int> letters_;  // canonical form
};

/// Canonical-form comparison (the fast path).
bool tensor_equal(const TensorElement& a, const TensorElement& b);

/// Independent decision procedure: searches for an explicit interleaver
/// chain g_1..g_{n-1} with b_i = g_{i-1}^{-1} a_i g_i. Used to cross-check
/// canonicalization.
bool tensor_equal_by_chain(const TensorElement& a, const TensorElement& b);

/// The chain itself, when one exists. For length <= 1 the chain is empty.
std::optional<std::vector<int>> interleaver_chain(const TensorElement& a,
                                                  const TensorElement& b);

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b);

int normalized_length(const TensorElement& a);

/// Enumerates, per length 0..max_len, all distinct monoid elements (units
/// at length 0, canonical words above).
std::vector<std::vector<TensorElement>> enumerate_elements(const BimodulePtr& b, int max_len);

/// Confirms nu(a) = |[aS,S]| - 1 by enumerating every factorization
/// a = p*s over complete element lists and counting R-classes of the left
/// divisors per length: exactly one at each length 0..len(a).
struct DivisorChainAudit {
  int length = 0;                          // the reported nu(a)
  std::vector<int> divisor_class_count;    // per length, expected all 1
  bool ok = false;
};
DivisorChainAudit divisor_chain_audit(const TensorElement& a, int max_len = 6);
DivisorChainAudit divisor_chain_audit(const TensorElement& a,
                                      const std::vector<std::vector<TensorElement>>& elements);

/// Witness for equidivisibility: given pq = rs, either u with r = pu and
/// q = us (left) or v with p = rv and s = vq (right).
struct EquidivisionWitness {
  bool left;
  TensorElement factor;
};
EquidivisionWitness equidivide(const TensorElement& p, const TensorElement& q,
                               const TensorElement& r, const TensorElement& s);

/// Target adapters for extending a bimodule morphism to the tensor monoid.
struct TensorMonoidTarget {
  using Elem = TensorElement;
  BimodulePtr bimodule;
  Elem one() const { return TensorElement::identity(bimodule); }
  Elem mul(const Elem& a, const Elem& b) const { return tensor_mul(a, b); }
  bool equal(const Elem& a, const Elem& b) const { return tensor_equal(a, b); }
};

/// Unique monoid homomorphism T(X) -> S extending a bimodule morphism
/// (alpha, beta); alpha gives the image of each unit, beta of each atom.
/// Construction validates the morphism law beta(g1 u g2) =
/// alpha(g1) beta(u) alpha(g2) exhaustively and spot-checks well-definedness
/// on random interleaver-equal pairs.
template <class Target>
class TensorMorphism {
 public:
  TensorMorphism(BimodulePtr source, std::vector<typename Target::Elem> alpha,
                 std::vector<typename Target::Elem> beta, Target target,
                 std::uint64_t seed = 0xd1ce5eedULL);

  typename Target::Elem apply(const TensorElement& e) const;

 private:
  BimodulePtr source_;
  std::vector<typename Target::Elem> alpha_;
  std::vector<typename Target::Elem> beta_;
  Target target_;
};

template <class Target>
TensorMorphism<Target>::TensorMorphism(BimodulePtr source,
                                       std::vector<typename Target::Elem> alpha,
                                       std::vector<typename Target::Elem> beta,
                                       Target target, std::uint64_t seed)
    : source_(std::move(source)),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      target_(std::move(target)) {
  const auto& g = source_->group();
  if (static_cast<int>(alpha_.size()) != g->order() ||
      static_cast<int>(beta_.size()) != source_->carrier_size())
    fail(ErrorCode::NotAMorphism, "alpha/beta tables have wrong sizes");
  // alpha must be a monoid homomorphism on the group of units.
  for (int a = 0; a < g->order(); ++a) {
    for (int b = 0; b < g->order(); ++b) {
      if (!target_.equal(alpha_[g->mul(a, b)], target_.mul(alpha_[a], alpha_[b])))
        fail(ErrorCode::NotAMorphism,
             "alpha not multiplicative at (" + g->label(a) + "," + g->label(b) + ")");
    }
  }
  for (int g1 = 0; g1 < g->order(); ++g1) {
    for (int g2 = 0; g2 < g->order(); ++g2) {
      for (int u = 0; u < source_->carrier_size(); ++u) {
        int moved = source_->right(source_->left(g1, u), g2);
        auto expect = target_.mul(alpha_[g1], target_.mul(beta_[u], alpha_[g2]));
        if (!target_.equal(beta_[moved], expect))
          fail(ErrorCode::NotAMorphism,
               "beta(g1 u g2) != alpha(g1) beta(u) alpha(g2) at (" + g->label(g1) + "," +
                   source_->label(u) + "," + g->label(g2) + ")");
      }
    }
  }
  // Well-definedness: map both sides of random interleaver-equal pairs.
  std::mt19937_64 rng(seed);
  auto rand_int = [&rng](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  for (int trial = 0; trial < 100; ++trial) {
    int len = 2 + rand_int(3);
    std::vector<int> xs(len), ys(len);
    for (int i = 0; i < len; ++i) xs[i] = rand_int(source_->carrier_size());
    std::vector<int> chain(len - 1);
    for (int i = 0; i + 1 < len; ++i) chain[i] = rand_int(g->order());
    for (int i = 0; i < len; ++i) {
      int v = xs[i];
      if (i > 0) v = source_->left(g->inv(chain[i - 1]), v);
      if (i + 1 < len) v = source_->right(v, chain[i]);
      ys[i] = v;
    }
    auto ea = TensorElement::word(source_, xs);
    auto eb = TensorElement::word(source_, ys);
    if (!target_.equal(apply(ea), apply(eb)))
      fail(ErrorCode::WellDefinednessViolation,
           "images of interleaver-equal words differ (bug signal)");
  }
}

template <class Target>
typename Target::Elem TensorMorphism<Target>::apply(const TensorElement& e) const {
  if (e.bimodule() != source_) fail(ErrorCode::BimoduleMismatch, "element of a different bimodule");
  if (e.is_unit()) return alpha_[e.unit_value()];
  auto acc = beta_[e.letters()[0]];
  for (size_t i = 1; i < e.letters().size(); ++i) acc = target_.mul(acc, beta_[e.letters()[i]]);
  return acc;
}

}  // namespace levi

#endif  // LEVI_TENSOR_HPP
