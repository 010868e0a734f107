#include "levi/hnn.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace levi {

FiniteGroupOracle::FiniteGroupOracle(GroupPtr group, PartialHom phi)
    : group_(std::move(group)), phi_(std::move(phi)) {
  if (phi_.domain().parent() != group_ || phi_.codomain() != group_)
    fail(ErrorCode::GroupMismatch, "phi must be a partial endomorphism of the oracle group");
  cos_a_ = left_cosets(group_, phi_.domain());
  cos_b_ = left_cosets(group_, phi_.image());
}

int FiniteGroupOracle::idx(const BigInt& g) const {
  int v = g.convert_to<int>();
  if (!group_->valid_index(v)) fail(ErrorCode::BadIndex, "oracle element " + g.str());
  return v;
}

BigInt FiniteGroupOracle::identity() const { return BigInt(group_->identity()); }
BigInt FiniteGroupOracle::mul(const BigInt& a, const BigInt& b) const {
  return BigInt(group_->mul(idx(a), idx(b)));
}
BigInt FiniteGroupOracle::inverse(const BigInt& a) const { return BigInt(group_->inv(idx(a))); }
bool FiniteGroupOracle::in_A(const BigInt& g) const { return phi_.domain().contains(idx(g)); }
bool FiniteGroupOracle::in_B(const BigInt& g) const { return phi_.image().contains(idx(g)); }

BigInt FiniteGroupOracle::apply_phi(const BigInt& a) const {
  return BigInt(phi_.apply(idx(a)));
}

BigInt FiniteGroupOracle::apply_phi_inv(const BigInt& b) const {
  if (!phi_.injective())
    fail(ErrorCode::InverseLetterWithoutAutomorphism, "phi is not injective");
  auto a = phi_.preimage(idx(b));
  if (!a) fail(ErrorCode::BadIndex, "element outside im(phi)");
  return BigInt(*a);
}

std::pair<BigInt, BigInt> FiniteGroupOracle::rep_mod_A(const BigInt& g) const {
  int v = idx(g);
  return {BigInt(cos_a_.transversal[cos_a_.coset_of[v]]), BigInt(cos_a_.h_part[v])};
}

std::pair<BigInt, BigInt> FiniteGroupOracle::rep_mod_B(const BigInt& g) const {
  int v = idx(g);
  return {BigInt(cos_b_.transversal[cos_b_.coset_of[v]]), BigInt(cos_b_.h_part[v])};
}

bool FiniteGroupOracle::phi_injective() const { return phi_.injective(); }

std::string FiniteGroupOracle::label(const BigInt& g) const { return group_->label(idx(g)); }

std::optional<BigInt> FiniteGroupOracle::parse(const std::string& text) const {
  if (auto i = group_->index_of(text)) return BigInt(*i);
  return std::nullopt;
}

IntegerOracle::IntegerOracle(BigInt m, BigInt n) : m_(std::move(m)), n_(std::move(n)) {
  if (m_ == 0 || n_ == 0) fail(ErrorCode::BadIndex, "m and n must be nonzero");
}

BigInt IntegerOracle::apply_phi(const BigInt& a) const {
  if (a % n_ != 0) fail(ErrorCode::BadIndex, "element outside nZ");
  return a / n_ * m_;
}

BigInt IntegerOracle::apply_phi_inv(const BigInt& b) const {
  if (b % m_ != 0) fail(ErrorCode::BadIndex, "element outside mZ");
  return b / m_ * n_;
}

std::pair<BigInt, BigInt> IntegerOracle::rep_mod_A(const BigInt& g) const {
  BigInt mod = abs(n_);
  BigInt r = g % mod;
  if (r < 0) r += mod;
  return {r, g - r};
}

std::pair<BigInt, BigInt> IntegerOracle::rep_mod_B(const BigInt& g) const {
  BigInt mod = abs(m_);
  BigInt r = g % mod;
  if (r < 0) r += mod;
  return {r, g - r};
}

std::optional<BigInt> IntegerOracle::parse(const std::string& text) const {
  if (text.empty()) return std::nullopt;
  size_t start = text[0] == '-' || text[0] == '+' ? 1 : 0;
  if (start == text.size()) return std::nullopt;
  for (size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
  return BigInt(text);
}

std::vector<HNNToken> parse_hnn_word(const GroupOracle& oracle, const std::string& text,
                                     int component_count) {
  std::vector<HNNToken> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == 't') {
      size_t pos = 1;
      int component = 0;
      if (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) {
        int v = 0;
        while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos])))
          v = v * 10 + (tok[pos++] - '0');
        component = v - 1;
      }
      int exp = 1;
      if (pos < tok.size()) {
        if (tok.substr(pos) == "^-1")
          exp = -1;
        else
          fail(ErrorCode::ParseError, "bad stable-letter token '" + tok + "'");
      }
      if (component < 0 || component >= component_count)
        fail(ErrorCode::ParseError, "stable letter index out of range in '" + tok + "'");
      out.push_back(HNNToken::stable(exp, component));
      continue;
    }
    if (auto g = oracle.parse(tok)) {
      out.push_back(HNNToken::group(*g));
      continue;
    }
    fail(ErrorCode::ParseError, "unknown token '" + tok + "'");
  }
  return out;
}

HNNWord hnn_reduce(const HNNPresentation& p, const std::vector<HNNToken>& word) {
  const auto& o = *p.oracle;
  std::vector<HNNSyllable> syllables;
  BigInt acc = o.identity();
  for (const auto& tok : word) {
    if (tok.kind == HNNToken::Kind::Group) {
      acc = o.mul(acc, tok.g);
      continue;
    }
    if (tok.exp > 0) {
      if (!syllables.empty() && syllables.back().exp == -1 && o.in_A(acc)) {
        // ... x t^-1 a t  ->  ... x phi(a)
        acc = o.mul(syllables.back().rep, o.apply_phi(acc));
        syllables.pop_back();
      } else {
        auto [rep, a_part] = o.rep_mod_A(acc);
        syllables.push_back(HNNSyllable{rep, 1});
        acc = o.apply_phi(a_part);
      }
    } else {
      if (!o.phi_injective())
        fail(ErrorCode::InverseLetterWithoutAutomorphism,
             "t^-1 needs an injective phi; only the monoid presentation applies");
      if (!syllables.empty() && syllables.back().exp == 1 && o.in_B(acc)) {
        // ... x t b t^-1  ->  ... x phi^-1(b)
        acc = o.mul(syllables.back().rep, o.apply_phi_inv(acc));
        syllables.pop_back();
      } else {
        auto [rep, b_part] = o.rep_mod_B(acc);
        syllables.push_back(HNNSyllable{rep, -1});
        acc = o.apply_phi_inv(b_part);
      }
    }
    if (static_cast<int>(syllables.size()) > p.max_syllables)
      fail(ErrorCode::SyllableLimitExceeded,
           "word exceeds " + std::to_string(p.max_syllables) + " t-syllables");
  }
  return HNNWord{std::move(syllables), std::move(acc)};
}

bool hnn_equal(const HNNPresentation& p, const std::vector<HNNToken>& w1,
               const std::vector<HNNToken>& w2) {
  return hnn_reduce(p, w1) == hnn_reduce(p, w2);
}

std::string hnn_to_string(const HNNPresentation& p, const HNNWord& w) {
  const auto& o = *p.oracle;
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const std::string& s) {
    if (!first) out << ' ';
    out << s;
    first = false;
  };
  for (const auto& syl : w.syllables) {
    if (!o.equals(syl.rep, o.identity())) emit(o.label(syl.rep));
    emit(syl.exp > 0 ? "t" : "t^-1");
  }
  if (first || !o.equals(w.tail, o.identity())) emit(o.label(w.tail));
  return out.str();
}

Subgroup hnn_collapse(const GroupPtr& g, const PartialHom& phi) {
  std::vector<char> member(g->order(), 0);
  member[g->identity()] = 1;
  for (int a : phi.domain().elements())
    if (phi.apply(a) == g->identity()) member[a] = 1;

  auto saturate = [&]() {
    bool changed = true;
    while (changed) {
      changed = false;
      // normal closure + subgroup closure
      for (int x = 0; x < g->order(); ++x) {
        if (!member[x]) continue;
        for (int c = 0; c < g->order(); ++c) {
          int y = g->conj(x, c);
          if (!member[y]) { member[y] = 1; changed = true; }
        }
        int xi = g->inv(x);
        if (!member[xi]) { member[xi] = 1; changed = true; }
        for (int y = 0; y < g->order(); ++y) {
          if (!member[y]) continue;
          int z = g->mul(x, y);
          if (!member[z]) { member[z] = 1; changed = true; }
        }
      }
    }
  };
  saturate();
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a : phi.domain().elements()) {
      int b = phi.apply(a);
      if (member[a] && !member[b]) { member[b] = 1; grew = true; }
      if (member[b] && !member[a]) { member[a] = 1; grew = true; }
    }
    if (grew) saturate();
  }
  std::vector<int> elems;
  for (int x = 0; x < g->order(); ++x)
    if (member[x]) elems.push_back(x);
  return Subgroup(g, elems);
}

namespace {

// Quotient presentation data shared by MonoidEmbedding and
// AmalgamPresentation: G/M together with the induced partial homs.
struct CollapsedData {
  GroupPtr quotient;
  std::vector<int> projection;
  bool collapsed = false;
};

CollapsedData collapse_group(const GroupPtr& g, const std::vector<PartialHom>& phis) {
  // Joint fixed point across all components.
  std::vector<char> member(g->order(), 0);
  member[g->identity()] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& phi : phis) {
      // ker phi and phi-saturation relative to the current M.
      for (int a : phi.domain().elements()) {
        int b = phi.apply(a);
        bool a_in = member[a], b_in = member[b];
        if (b_in && !a_in) { member[a] = 1; grew = true; }
        if (a_in && !b_in) { member[b] = 1; grew = true; }
      }
      // normal/subgroup closure
      bool changed = true;
      while (changed) {
        changed = false;
        for (int x = 0; x < g->order(); ++x) {
          if (!member[x]) continue;
          for (int c = 0; c < g->order(); ++c) {
            int y = g->conj(x, c);
            if (!member[y]) { member[y] = 1; changed = true; grew = true; }
          }
          int xi = g->inv(x);
          if (!member[xi]) { member[xi] = 1; changed = true; grew = true; }
          for (int y = 0; y < g->order(); ++y) {
            if (!member[y]) continue;
            int z = g->mul(x, y);
            if (!member[z]) { member[z] = 1; changed = true; grew = true; }
          }
        }
      }
    }
  }
  std::vector<int> elems;
  for (int x = 0; x < g->order(); ++x)
    if (member[x]) elems.push_back(x);
  Subgroup m(g, elems);

  CollapsedData out;
  if (m.size() == 1) {
    out.quotient = g;
    out.projection.resize(g->order());
    for (int x = 0; x < g->order(); ++x) out.projection[x] = x;
    out.collapsed = false;
    return out;
  }
  auto q = quotient_group(g, m);
  out.quotient = q.group;
  out.projection = std::move(q.projection);
  out.collapsed = true;
  return out;
}

// Induced partial endomorphism of the quotient; injective by construction
// of the collapse.
PartialHom induce_phi(const CollapsedData& c, const PartialHom& phi) {
  std::vector<int> dom_elems;
  std::vector<char> seen(c.quotient->order(), 0);
  std::vector<int> images(c.quotient->order(), -1);
  for (int a : phi.domain().elements()) {
    int ca = c.projection[a];
    int cb = c.projection[phi.apply(a)];
    if (images[ca] >= 0 && images[ca] != cb)
      fail(ErrorCode::QuotientIllDefined, "collapse did not saturate phi (bug signal)");
    images[ca] = cb;
    if (!seen[ca]) {
      seen[ca] = 1;
      dom_elems.push_back(ca);
    }
  }
  Subgroup domain(c.quotient, dom_elems);
  std::vector<int> image_list;
  for (int a : domain.elements()) image_list.push_back(images[a]);
  PartialHom induced(domain, c.quotient, image_list);
  if (!induced.injective())
    fail(ErrorCode::QuotientIllDefined, "induced phi is not injective (bug signal)");
  return induced;
}



}  // namespace

MonoidEmbedding::MonoidEmbedding(SelfSimilarAction action, int base_letter)
    : action_(std::move(action)), base_letter_(base_letter) {
  require_valid(action_, 2);
  auto orbits = letter_orbits(action_);
  for (int x : orbits)
    if (x != 0) fail(ErrorCode::NotIrreducible, "action is not transitive on letters");
  if (base_letter_ < 0 || base_letter_ >= action_.alphabet_size)
    fail(ErrorCode::BadIndex, "base letter out of range");

  const auto& g = action_.group;
  conj_.assign(action_.alphabet_size, -1);
  conj_res_.assign(action_.alphabet_size, -1);
  for (int y = 0; y < action_.alphabet_size; ++y) {
    for (int c = 0; c < g->order(); ++c) {
      if (action_.act[c][base_letter_] == y) {
        conj_[y] = c;
        conj_res_[y] = action_.res[c][base_letter_];
        break;
      }
    }
    if (conj_[y] < 0) fail(ErrorCode::NotIrreducible, "letter not reachable (bug signal)");
  }

  auto stab = stabilizer_data(action_, {base_letter_});
  CollapsedData c = collapse_group(g, {stab.phi});
  collapsed_ = c.collapsed;
  project_ = c.projection;
  PartialHom phi = c.collapsed ? induce_phi(c, stab.phi) : stab.phi;
  pres_.oracle = std::make_shared<FiniteGroupOracle>(c.quotient, std::move(phi));
  pres_.name = action_.name;
}

std::vector<HNNToken> MonoidEmbedding::spell(const ReesElement& e) const {
  const auto& g = action_.group;
  std::vector<HNNToken> tokens;
  for (int y : e.word) {
    tokens.push_back(HNNToken::group(project(conj_[y])));
    tokens.push_back(HNNToken::stable(1));
    tokens.push_back(HNNToken::group(project(g->inv(conj_res_[y]))));
  }
  tokens.push_back(HNNToken::group(project(e.unit)));
  return tokens;
}

HNNWord MonoidEmbedding::embed(const ReesElement& e) const {
  return hnn_reduce(pres_, spell(e));
}

std::optional<std::pair<ReesElement, ReesElement>> MonoidEmbedding::find_collision(
    int max_length) const {
  std::map<HNNWord, ReesElement> seen;
  for (const auto& e : enumerate_rees(action_, max_length)) {
    auto nf = embed(e);
    auto [it, fresh] = seen.emplace(std::move(nf), e);
    if (!fresh) return std::pair{it->second, e};
  }
  return std::nullopt;
}

AmalgamPresentation::AmalgamPresentation(GroupPtr group, std::vector<PartialHom> phis,
                                         int max_syllables)
    : group_(std::move(group)), max_syllables_(max_syllables) {
  if (phis.empty()) fail(ErrorCode::BadIndex, "at least one component required");
  for (const auto& phi : phis)
    if (phi.domain().parent() != group_ || phi.codomain() != group_)
      fail(ErrorCode::MixedGroups, "components must share the unit group");
  CollapsedData c = collapse_group(group_, phis);
  quotient_ = c.quotient;
  project_ = c.projection;
  collapsed_ = c.collapsed;
  for (auto& phi : phis) {
    PartialHom induced = c.collapsed ? induce_phi(c, phi) : std::move(phi);
    oracles_.push_back(std::make_shared<FiniteGroupOracle>(quotient_, std::move(induced)));
  }
}

AmalgamWord AmalgamPresentation::reduce(const std::vector<HNNToken>& word) const {
  std::vector<AmalgamSegment> segments;
  BigInt acc = BigInt(quotient_->identity());
  int syllable_count = 0;
  for (const auto& tok : word) {
    if (tok.kind == HNNToken::Kind::Group) {
      acc = BigInt(quotient_->mul(acc.convert_to<int>(), tok.g.convert_to<int>()));
      continue;
    }
    if (tok.component < 0 || tok.component >= component_count())
      fail(ErrorCode::BadIndex, "stable letter index out of range");
    const auto& o = *oracles_[tok.component];
    bool top_matches = !segments.empty() && segments.back().component == tok.component &&
                       !segments.back().syllables.empty();
    if (tok.exp > 0) {
      if (top_matches && segments.back().syllables.back().exp == -1 && o.in_A(acc)) {
        acc = o.mul(segments.back().syllables.back().rep, o.apply_phi(acc));
        segments.back().syllables.pop_back();
        --syllable_count;
        if (segments.back().syllables.empty()) segments.pop_back();
      } else {
        auto [rep, a_part] = o.rep_mod_A(acc);
        if (segments.empty() || segments.back().component != tok.component)
          segments.push_back(AmalgamSegment{tok.component, {}});
        segments.back().syllables.push_back(HNNSyllable{rep, 1});
        ++syllable_count;
        acc = o.apply_phi(a_part);
      }
    } else {
      if (!o.phi_injective())
        fail(ErrorCode::InverseLetterWithoutAutomorphism,
             "t^-1 needs an injective phi; only the monoid presentation applies");
      if (top_matches && segments.back().syllables.back().exp == 1 && o.in_B(acc)) {
        acc = o.mul(segments.back().syllables.back().rep, o.apply_phi_inv(acc));
        segments.back().syllables.pop_back();
        --syllable_count;
        if (segments.back().syllables.empty()) segments.pop_back();
      } else {
        auto [rep, b_part] = o.rep_mod_B(acc);
        if (segments.empty() || segments.back().component != tok.component)
          segments.push_back(AmalgamSegment{tok.component, {}});
        segments.back().syllables.push_back(HNNSyllable{rep, -1});
        ++syllable_count;
        acc = o.apply_phi_inv(b_part);
      }
    }
    if (syllable_count > max_syllables_)
      fail(ErrorCode::SyllableLimitExceeded,
           "word exceeds " + std::to_string(max_syllables_) + " t-syllables");
  }
  return AmalgamWord{std::move(segments), std::move(acc)};
}

bool AmalgamPresentation::equal(const std::vector<HNNToken>& w1,
                                const std::vector<HNNToken>& w2) const {
  return reduce(w1) == reduce(w2);
}

std::string AmalgamPresentation::to_string(const AmalgamWord& w) const {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const std::string& s) {
    if (!first) out << ' ';
    out << s;
    first = false;
  };
  const bool tagged = component_count() > 1;
  for (const auto& seg : w.segments) {
    const auto& o = *oracles_[seg.component];
    std::string t = tagged ? "t" + std::to_string(seg.component + 1) : "t";
    for (const auto& syl : seg.syllables) {
      if (!o.equals(syl.rep, o.identity())) emit(o.label(syl.rep));
      emit(syl.exp > 0 ? t : t + "^-1");
    }
  }
  if (first || w.tail.convert_to<int>() != quotient_->identity())
    emit(quotient_->label(w.tail.convert_to<int>()));
  return out.str();
}

std::vector<HNNToken> AmalgamPresentation::parse(const std::string& text) const {
  return parse_hnn_word(*oracles_[0], text, component_count());
}

AmalgamEmbedding::AmalgamEmbedding(SelfSimilarAction action)
    : action_(std::move(action)),
      pres_([&] {
        require_valid(action_, 2);
        auto comps = components(action_);
        std::vector<PartialHom> phis;
        for (const auto& comp : comps) {
          auto stab = stabilizer_data(action_, {comp.letters[0]});
          phis.push_back(stab.phi);
        }
        return AmalgamPresentation(action_.group, std::move(phis));
      }()) {
  const auto& g = action_.group;
  letter_component_ = letter_orbits(action_);
  conj_.assign(action_.alphabet_size, -1);
  conj_res_.assign(action_.alphabet_size, -1);
  auto comps = components(action_);
  for (int y = 0; y < action_.alphabet_size; ++y) {
    int base = comps[letter_component_[y]].letters[0];
    for (int c = 0; c < g->order(); ++c) {
      if (action_.act[c][base] == y) {
        conj_[y] = c;
        conj_res_[y] = action_.res[c][base];
        break;
      }
    }
  }
}

std::vector<HNNToken> AmalgamEmbedding::spell(const ReesElement& e) const {
  const auto& g = action_.group;
  std::vector<HNNToken> tokens;
  for (int y : e.word) {
    tokens.push_back(HNNToken::group(pres_.project(conj_[y])));
    tokens.push_back(HNNToken::stable(1, letter_component_[y]));
    tokens.push_back(HNNToken::group(pres_.project(g->inv(conj_res_[y]))));
  }
  tokens.push_back(HNNToken::group(pres_.project(e.unit)));
  return tokens;
}

AmalgamWord AmalgamEmbedding::embed(const ReesElement& e) const {
  return pres_.reduce(spell(e));
}

namespace {
bool amalgam_word_less(const AmalgamWord& a, const AmalgamWord& b) {
  if (a.segments.size() != b.segments.size()) return a.segments.size() < b.segments.size();
  for (size_t i = 0; i < a.segments.size(); ++i) {
    const auto& sa = a.segments[i];
    const auto& sb = b.segments[i];
    if (sa.component != sb.component) return sa.component < sb.component;
    if (sa.syllables.size() != sb.syllables.size())
      return sa.syllables.size() < sb.syllables.size();
    for (size_t j = 0; j < sa.syllables.size(); ++j) {
      if (!(sa.syllables[j] == sb.syllables[j])) return sa.syllables[j] < sb.syllables[j];
    }
  }
  return a.tail < b.tail;
}
}  // namespace

std::optional<std::pair<ReesElement, ReesElement>> AmalgamEmbedding::find_collision(
    int max_length) const {
  auto cmp = [](const AmalgamWord& a, const AmalgamWord& b) { return amalgam_word_less(a, b); };
  std::map<AmalgamWord, ReesElement, decltype(cmp)> seen(cmp);
  for (const auto& e : enumerate_rees(action_, max_length)) {
    auto nf = embed(e);
    auto [it, fresh] = seen.emplace(std::move(nf), e);
    if (!fresh) return std::pair{it->second, e};
  }
  return std::nullopt;
}

FreeGroupZS::FreeGroupZS(SelfSimilarAction action) : action_(std::move(action)) {
  require_valid(action_, 2);
  const auto& g = action_.group;
  rho_inv_.assign(action_.alphabet_size, std::vector<int>(g->order(), -1));
  for (int x = 0; x < action_.alphabet_size; ++x) {
    for (int gi = 0; gi < g->order(); ++gi) {
      int v = action_.res[gi][x];
      if (rho_inv_[x][v] >= 0)
        fail(ErrorCode::NotLeftSymmetric,
             "rho_" + action_.letter(x) + " is not injective (" + g->label(rho_inv_[x][v]) +
                 " and " + g->label(gi) + " restrict equally)");
      rho_inv_[x][v] = gi;
    }
  }
}

std::vector<SignedLetter> FreeGroupZS::free_reduce(const std::vector<SignedLetter>& w) {
  std::vector<SignedLetter> out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().letter == l.letter && out.back().inverse != l.inverse)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

std::vector<SignedLetter> FreeGroupZS::act(int g, const std::vector<SignedLetter>& w) const {
  std::vector<SignedLetter> out;
  out.reserve(w.size());
  int carry = g;
  for (const auto& l : w) {
    if (!l.inverse) {
      out.push_back(SignedLetter{action_.act[carry][l.letter], false});
      carry = action_.res[carry][l.letter];
    } else {
      int h = rho_inv_[l.letter][carry];
      out.push_back(SignedLetter{action_.act[h][l.letter], true});
      carry = h;
    }
  }
  return out;
}

int FreeGroupZS::res(int g, const std::vector<SignedLetter>& w) const {
  int carry = g;
  for (const auto& l : w) {
    if (!l.inverse)
      carry = action_.res[carry][l.letter];
    else
      carry = rho_inv_[l.letter][carry];
  }
  return carry;
}

FreeGroupZSElement FreeGroupZS::identity() const {
  return FreeGroupZSElement{{}, action_.group->identity()};
}

FreeGroupZSElement FreeGroupZS::from_rees(const ReesElement& e) const {
  FreeGroupZSElement out;
  for (int x : e.word) out.word.push_back(SignedLetter{x, false});
  out.unit = e.unit;
  return out;
}

FreeGroupZSElement FreeGroupZS::mul(const FreeGroupZSElement& e1,
                                    const FreeGroupZSElement& e2) const {
  auto moved = act(e1.unit, e2.word);
  auto word = e1.word;
  word.insert(word.end(), moved.begin(), moved.end());
  return FreeGroupZSElement{free_reduce(word),
                            action_.group->mul(res(e1.unit, e2.word), e2.unit)};
}

FreeGroupZSElement FreeGroupZS::inverse(const FreeGroupZSElement& e) const {
  const auto& g = action_.group;
  std::vector<SignedLetter> reversed(e.word.rbegin(), e.word.rend());
  for (auto& l : reversed) l.inverse = !l.inverse;
  int gi = g->inv(e.unit);
  return FreeGroupZSElement{act(gi, reversed), res(gi, reversed)};
}

std::string FreeGroupZS::to_string(const FreeGroupZSElement& e) const {
  std::string word;
  for (const auto& l : e.word) {
    word += action_.letter(l.letter);
    if (l.inverse) word += "^-1";
  }
  if (word.empty()) word = "ε";
  return "(" + word + "," + action_.group->label(e.unit) + ")";
}

}  // namespace levi
