#include <doctest.h>

#include <random>

#include "levi/hnn.hpp"
#include "levi/io.hpp"

using namespace levi;

namespace {

const Workspace& corpus() {
  static Workspace w = Workspace::with_corpus();
  return w;
}

std::vector<HNNToken> tokens(const HNNPresentation& p, const std::string& text) {
  return parse_hnn_word(*p.oracle, text);
}

// Random word over G ∪ {t, t^-1} with bounded stable letters.
std::vector<HNNToken> random_word(std::mt19937_64& rng, const GroupOracle& oracle,
                                  bool allow_inverse, int len, int group_range) {
  std::vector<HNNToken> out;
  for (int i = 0; i < len; ++i) {
    switch (rng() % 3) {
      case 0:
        out.push_back(HNNToken::stable(1));
        break;
      case 1:
        if (allow_inverse) {
          out.push_back(HNNToken::stable(-1));
          break;
        }
        [[fallthrough]];
      default: {
        BigInt g = static_cast<int>(rng() % group_range);
        if (allow_inverse && rng() % 2) g = oracle.inverse(g);
        out.push_back(HNNToken::group(g));
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("integer oracle arithmetic") {
  IntegerOracle o(2, 3);  // A = 3Z, B = 2Z, phi(3k) = 2k
  CHECK(o.in_A(6));
  CHECK_FALSE(o.in_A(5));
  CHECK(o.apply_phi(9) == 6);
  CHECK(o.apply_phi_inv(6) == 9);
  SUBCASE("rep_mod_A recomposes on 1000 random integers") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 1000; ++trial) {
      BigInt g = static_cast<long long>(rng()) % 1000000;
      auto [rep, a] = o.rep_mod_A(g);
      CHECK(rep + a == g);
      CHECK(o.in_A(a));
      CHECK(rep >= 0);
      CHECK(rep < 3);
    }
  }
  SUBCASE("identity coset is represented by the identity") {
    CHECK(o.rep_mod_A(27).first == 0);
    CHECK(o.rep_mod_B(-14).first == 0);
  }
}

TEST_CASE("finite group oracle recomposes") {
  const auto& a = corpus().action("c2-swap");
  auto stab = stabilizer_data(a, {0});
  FiniteGroupOracle o(a.group, stab.phi);
  for (int g = 0; g < 2; ++g) {
    auto [rep, part] = o.rep_mod_A(BigInt(g));
    CHECK(o.mul(rep, part) == BigInt(g));
    CHECK(o.in_A(part));
  }
}

TEST_CASE("britton reduction basics") {
  SUBCASE("empty word reduces to the identity") {
    const auto& bs12 = corpus().presentation("bs12");
    auto nf = hnn_reduce(bs12, {});
    CHECK(nf.syllables.empty());
    CHECK(nf.tail == 0);
  }
  SUBCASE("c2-swap presentation: s t t^-1 s reduces to the identity") {
    MonoidEmbedding embed(corpus().action("c2-swap"));
    const auto& p = embed.presentation();
    auto nf = hnn_reduce(p, tokens(p, "s t t^-1 s"));
    CHECK(nf.syllables.empty());
    CHECK(nf.tail == p.oracle->identity());
  }
  SUBCASE("BS rule: t^-1 n t = m") {
    const auto& bs23 = corpus().presentation("bs23");  // A = 3Z, phi(3) = 2
    auto nf = hnn_reduce(bs23, tokens(bs23, "t^-1 3 t"));
    CHECK(nf.syllables.empty());
    CHECK(nf.tail == 2);
  }
  SUBCASE("bs12 sanity: t^-1 2 t = 1") {
    const auto& bs12 = corpus().presentation("bs12");  // A = 2Z, phi(2k) = k
    CHECK(hnn_equal(bs12, tokens(bs12, "t^-1 2 t"), tokens(bs12, "1")));
  }
  SUBCASE("t and t^-1 have distinct normal forms in bs12") {
    const auto& bs12 = corpus().presentation("bs12");
    CHECK_FALSE(hnn_equal(bs12, tokens(bs12, "t"), tokens(bs12, "t^-1")));
  }
  SUBCASE("w equals w t t^-1") {
    const auto& bs12 = corpus().presentation("bs12");
    auto w = tokens(bs12, "3 t 5 t^-1 7");
    auto w2 = w;
    w2.push_back(HNNToken::stable(1));
    w2.push_back(HNNToken::stable(-1));
    CHECK(hnn_equal(bs12, w, w2));
  }
  SUBCASE("defining relations a t = t phi(a) hold for all a in A at desk scale") {
    const auto& bs23 = corpus().presentation("bs23");
    for (int k = -20; k <= 20; ++k) {
      std::vector<HNNToken> lhs{HNNToken::group(3 * k), HNNToken::stable(1)};
      std::vector<HNNToken> rhs{HNNToken::stable(1), HNNToken::group(2 * k)};
      CHECK(hnn_equal(bs23, lhs, rhs));
    }
    MonoidEmbedding embed(corpus().action("s3-a3-identity"));
    const auto& p = embed.presentation();
    const auto* oracle = dynamic_cast<const FiniteGroupOracle*>(p.oracle.get());
    REQUIRE(oracle != nullptr);
    for (int a : oracle->phi().domain().elements()) {
      std::vector<HNNToken> lhs{HNNToken::group(a), HNNToken::stable(1)};
      std::vector<HNNToken> rhs{HNNToken::stable(1), HNNToken::group(oracle->phi().apply(a))};
      CHECK(hnn_equal(p, lhs, rhs));
    }
  }
  SUBCASE("normal forms carry coset representatives and no pinches") {
    const auto& bs23 = corpus().presentation("bs23");
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
      auto w = random_word(rng, *bs23.oracle, true, 1 + static_cast<int>(rng() % 10), 12);
      auto nf = hnn_reduce(bs23, w);
      for (size_t i = 0; i < nf.syllables.size(); ++i) {
        const auto& syl = nf.syllables[i];
        // representative of the right coset family
        if (syl.exp > 0)
          CHECK(bs23.oracle->rep_mod_A(syl.rep).first == syl.rep);
        else
          CHECK(bs23.oracle->rep_mod_B(syl.rep).first == syl.rep);
        if (i + 1 < nf.syllables.size() && nf.syllables[i + 1].exp != syl.exp) {
          // no t 1 t^-1 or t^-1 1 t
          CHECK(nf.syllables[i + 1].rep != bs23.oracle->identity());
        }
      }
    }
  }
}

TEST_CASE("britton reduction is idempotent and a congruence") {
  std::mt19937_64 rng(2024);
  std::vector<std::pair<std::string, HNNPresentation>> presentations;
  presentations.emplace_back("bs12", corpus().presentation("bs12"));
  presentations.emplace_back("bs23", corpus().presentation("bs23"));
  presentations.emplace_back("c2-swap",
                             MonoidEmbedding(corpus().action("c2-swap")).presentation());
  presentations.emplace_back("s3-a3-identity",
                             MonoidEmbedding(corpus().action("s3-a3-identity")).presentation());
  for (auto& [name, p] : presentations) {
    CAPTURE(name);
    bool finite = dynamic_cast<const IntegerOracle*>(p.oracle.get()) == nullptr;
    int group_range = finite ? 2 : 40;
    for (int trial = 0; trial < 1000; ++trial) {
      auto w = random_word(rng, *p.oracle, true, 1 + static_cast<int>(rng() % 12), group_range);
      auto nf = hnn_reduce(p, w);
      // idempotence: reducing the normal form spelled back as tokens
      std::vector<HNNToken> respelled;
      for (const auto& syl : nf.syllables) {
        respelled.push_back(HNNToken::group(syl.rep));
        respelled.push_back(HNNToken::stable(syl.exp));
      }
      respelled.push_back(HNNToken::group(nf.tail));
      CHECK(hnn_reduce(p, respelled) == nf);

      // congruence: reduce(w1 w2) = reduce(respell(reduce(w1)) respell(reduce(w2)))
      auto w2 = random_word(rng, *p.oracle, true, 1 + static_cast<int>(rng() % 8), group_range);
      auto lhs = w;
      lhs.insert(lhs.end(), w2.begin(), w2.end());
      auto rhs = respelled;
      auto nf2 = hnn_reduce(p, w2);
      for (const auto& syl : nf2.syllables) {
        rhs.push_back(HNNToken::group(syl.rep));
        rhs.push_back(HNNToken::stable(syl.exp));
      }
      rhs.push_back(HNNToken::group(nf2.tail));
      CHECK(hnn_reduce(p, lhs) == hnn_reduce(p, rhs));
    }
  }
}

TEST_CASE("coefficients grow without machine overflow in bs23") {
  const auto& bs23 = corpus().presentation("bs23");
  // t (2k) t^-1 = 3k, so t^40 2^40 t^-40 = 3^40, which exceeds 2^63.
  BigInt start = 1;
  for (int i = 0; i < 40; ++i) start *= 2;
  std::vector<HNNToken> w;
  for (int i = 0; i < 40; ++i) w.push_back(HNNToken::stable(1));
  w.push_back(HNNToken::group(start));
  for (int i = 0; i < 40; ++i) w.push_back(HNNToken::stable(-1));
  auto nf = hnn_reduce(bs23, w);
  CHECK(nf.syllables.empty());
  BigInt expect = 1;
  for (int i = 0; i < 40; ++i) expect *= 3;
  CHECK(nf.tail == expect);
  CHECK(nf.tail.str().size() >= 19);
}

TEST_CASE("the syllable cap fires") {
  const auto& bs12 = corpus().presentation("bs12");
  std::vector<HNNToken> w(70, HNNToken::stable(1));
  CHECK_THROWS_AS(hnn_reduce(bs12, w), Error);
}

TEST_CASE("monoid-only mode rejects t^-1 when phi is not injective") {
  MonoidEmbedding embed(corpus().action("rees-c4-square"));
  const auto& p = embed.presentation();
  // collapse makes phi injective; build a genuinely non-injective presentation
  const auto& a = corpus().action("rees-c4-square");
  auto stab = stabilizer_data(a, {0});
  HNNPresentation raw{std::make_shared<FiniteGroupOracle>(a.group, stab.phi), 64, "raw"};
  CHECK_FALSE(raw.oracle->phi_injective());
  CHECK_THROWS_AS(hnn_reduce(raw, {HNNToken::stable(-1)}), Error);
  // positive powers still reduce to the section-4 normal form
  auto nf = hnn_reduce(raw, {HNNToken::group(1), HNNToken::stable(1)});
  CHECK(nf.syllables.size() == 1);
  (void)p;
}

TEST_CASE("monoid embedding into the universal group") {
  SUBCASE("the identity element maps to the identity word") {
    MonoidEmbedding embed(corpus().action("c2-swap"));
    auto nf = embed.embed(rees_identity(corpus().action("c2-swap")));
    CHECK(nf.syllables.empty());
    CHECK(nf.tail == embed.presentation().oracle->identity());
  }
  SUBCASE("cancellative irreducible monoids embed injectively to length 4") {
    for (const char* name : {"c2-swap", "c2-twist", "s3-a3-identity", "rees-c4-inv"}) {
      CAPTURE(name);
      MonoidEmbedding embed(corpus().action(name));
      CHECK_FALSE(embed.collapsed());
      CHECK_FALSE(embed.find_collision(4).has_value());
    }
  }
  SUBCASE("embedding respects multiplication") {
    const auto& a = corpus().action("c2-twist");
    MonoidEmbedding embed(a);
    const auto& p = embed.presentation();
    auto pool = enumerate_rees(a, 2);
    for (const auto& e1 : pool)
      for (const auto& e2 : pool) {
        auto w = embed.spell(e1);
        auto w2 = embed.spell(e2);
        w.insert(w.end(), w2.begin(), w2.end());
        CHECK(hnn_reduce(p, w) == embed.embed(rees_mul(a, e1, e2)));
      }
  }
  SUBCASE("the non-right-cancellative example collides at length <= 3") {
    MonoidEmbedding embed(corpus().action("rees-c4-square"));
    CHECK(embed.collapsed());
    auto collision = embed.find_collision(3);
    REQUIRE(collision.has_value());
    auto [e1, e2] = *collision;
    CHECK_FALSE(e1 == e2);
    CHECK(embed.embed(e1) == embed.embed(e2));
    CHECK(e1.word.size() <= 3);
  }
  SUBCASE("reducible actions are rejected") {
    CHECK_THROWS_AS(MonoidEmbedding(corpus().action("c2-flat")), Error);
  }
}

TEST_CASE("hnn_collapse computes the kernel of G -> G*") {
  SUBCASE("injective phi collapses nothing") {
    const auto& a = corpus().action("c2-swap");
    auto stab = stabilizer_data(a, {0});
    CHECK(hnn_collapse(a.group, stab.phi).size() == 1);
  }
  SUBCASE("rees-c4-square kills the whole unit group") {
    const auto& a = corpus().action("rees-c4-square");
    auto stab = stabilizer_data(a, {0});
    // ker phi = {1, r2}; saturation pulls in r since phi(r) = r2 dies
    CHECK(hnn_collapse(a.group, stab.phi).size() == 4);
  }
  SUBCASE("c2-kernel components collapse C2") {
    const auto& a = corpus().action("c2-kernel");
    auto comps = components(a);
    auto stab = stabilizer_data(a, {comps[0].letters[0]});
    CHECK(hnn_collapse(a.group, stab.phi).size() == 2);
  }
}

TEST_CASE("amalgamated universal groups") {
  SUBCASE("single component agrees with hnn_equal") {
    const auto& a = corpus().action("c2-swap");
    MonoidEmbedding single(a);
    auto stab = stabilizer_data(a, {0});
    AmalgamPresentation amalgam(a.group, {stab.phi});
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
      auto w1 = random_word(rng, *single.presentation().oracle, true,
                            1 + static_cast<int>(rng() % 8), 2);
      auto w2 = random_word(rng, *single.presentation().oracle, true,
                            1 + static_cast<int>(rng() % 8), 2);
      CHECK(amalgam.equal(w1, w2) == hnn_equal(single.presentation(), w1, w2));
    }
  }
  SUBCASE("pinches cancel inside one component: t1 t1^-1 t2 = t2") {
    AmalgamEmbedding embed(corpus().action("c2-flat"));
    const auto& p = embed.presentation();
    auto w = p.parse("t1 t1^-1 t2");
    auto nf = p.reduce(w);
    REQUIRE(nf.segments.size() == 1);
    CHECK(nf.segments[0].component == 1);
    CHECK(nf.segments[0].syllables.size() == 1);
    CHECK(p.equal(w, p.parse("t2")));
  }
  SUBCASE("no reduced word has adjacent segments from one component") {
    AmalgamEmbedding embed(corpus().action("c2-flat"));
    const auto& p = embed.presentation();
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<HNNToken> w;
      int len = 1 + static_cast<int>(rng() % 12);
      for (int i = 0; i < len; ++i) {
        switch (rng() % 4) {
          case 0: w.push_back(HNNToken::stable(1, static_cast<int>(rng() % 2))); break;
          case 1: w.push_back(HNNToken::stable(-1, static_cast<int>(rng() % 2))); break;
          default: w.push_back(HNNToken::group(static_cast<int>(rng() % 2)));
        }
      }
      auto nf = p.reduce(w);
      for (size_t i = 0; i + 1 < nf.segments.size(); ++i) {
        CHECK(nf.segments[i].component != nf.segments[i + 1].component);
        CHECK_FALSE(nf.segments[i].syllables.empty());
      }
    }
  }
  SUBCASE("c2-flat embeds injectively up to length 3") {
    AmalgamEmbedding embed(corpus().action("c2-flat"));
    CHECK_FALSE(embed.find_collision(3).has_value());
  }
  SUBCASE("free2 embeds into F2 = Z * Z") {
    AmalgamEmbedding embed(corpus().action("free2"));
    CHECK_FALSE(embed.find_collision(4).has_value());
  }
  SUBCASE("the amalgam embedding respects multiplication") {
    const auto& a = corpus().action("c2-flat");
    AmalgamEmbedding embed(a);
    const auto& p = embed.presentation();
    auto pool = enumerate_rees(a, 2);
    for (const auto& e1 : pool)
      for (const auto& e2 : pool) {
        auto w = embed.spell(e1);
        auto w2 = embed.spell(e2);
        w.insert(w.end(), w2.begin(), w2.end());
        CHECK(p.reduce(w) == embed.embed(rees_mul(a, e1, e2)));
      }
  }
}

TEST_CASE("free-group Zappa-Szep product") {
  SUBCASE("g.(x x^-1) = empty and g|_{x x^-1} = g") {
    for (const char* name : {"free2", "c2-flat", "c2-twist", "rees-c4-inv"}) {
      CAPTURE(name);
      const auto& a = corpus().action(name);
      FreeGroupZS fg(a);
      for (int g = 0; g < a.group->order(); ++g) {
        for (int x = 0; x < a.alphabet_size; ++x) {
          std::vector<SignedLetter> w{{x, false}, {x, true}};
          CHECK(FreeGroupZS::free_reduce(fg.act(g, w)).empty());
          CHECK(fg.res(g, w) == g);
          std::vector<SignedLetter> winv{{x, true}, {x, false}};
          CHECK(FreeGroupZS::free_reduce(fg.act(g, winv)).empty());
          CHECK(fg.res(g, winv) == g);
        }
      }
    }
  }
  SUBCASE("c2-flat: (a^-1, s)(a, s) = (empty, 1)") {
    const auto& a = corpus().action("c2-flat");
    FreeGroupZS fg(a);
    FreeGroupZSElement e1{{{0, true}}, 1};
    FreeGroupZSElement e2{{{0, false}}, 1};
    auto prod = fg.mul(e1, e2);
    CHECK(prod.word.empty());
    CHECK(prod.unit == 0);
  }
  SUBCASE("c2-twist: s.a^-1 = b^-1 and s|_{a^-1} = s") {
    const auto& a = corpus().action("c2-twist");
    FreeGroupZS fg(a);
    std::vector<SignedLetter> w{{0, true}};
    auto moved = fg.act(1, w);
    REQUIRE(moved.size() == 1);
    CHECK(moved[0] == SignedLetter{1, true});
    CHECK(fg.res(1, w) == 1);
  }
  SUBCASE("non-left-symmetric actions are rejected") {
    CHECK_THROWS_AS(FreeGroupZS(corpus().action("c2-swap")), Error);
    CHECK_THROWS_AS(FreeGroupZS(corpus().action("rees-c4-square")), Error);
  }
  SUBCASE("restriction to non-negative words is rees_mul") {
    for (const char* name : {"free2", "c2-flat", "c2-twist", "rees-c4-inv"}) {
      const auto& a = corpus().action(name);
      FreeGroupZS fg(a);
      auto pool = enumerate_rees(a, 3);
      for (const auto& e1 : pool)
        for (const auto& e2 : pool) {
          if (e1.word.size() + e2.word.size() > 3) continue;
          auto expect = fg.from_rees(rees_mul(a, e1, e2));
          CHECK(fg.mul(fg.from_rees(e1), fg.from_rees(e2)) == expect);
        }
    }
  }
  SUBCASE("e * e^-1 = identity for 500 random elements") {
    std::mt19937_64 rng(4242);
    for (const char* name : {"c2-flat", "c2-twist", "rees-c4-inv"}) {
      const auto& a = corpus().action(name);
      FreeGroupZS fg(a);
      for (int trial = 0; trial < 500; ++trial) {
        std::vector<SignedLetter> w;
        int len = static_cast<int>(rng() % 6);
        for (int i = 0; i < len; ++i)
          w.push_back(SignedLetter{static_cast<int>(rng() % a.alphabet_size), rng() % 2 == 0});
        FreeGroupZSElement e{FreeGroupZS::free_reduce(w),
                             static_cast<int>(rng() % a.group->order())};
        auto prod = fg.mul(e, fg.inverse(e));
        CHECK(prod.word.empty());
        CHECK(prod.unit == a.group->identity());
        auto prod2 = fg.mul(fg.inverse(e), e);
        CHECK(prod2.word.empty());
        CHECK(prod2.unit == a.group->identity());
      }
    }
  }
  SUBCASE("associativity on sampled triples") {
    std::mt19937_64 rng(515151);
    const auto& a = corpus().action("c2-twist");
    FreeGroupZS fg(a);
    auto random_elem = [&]() {
      std::vector<SignedLetter> w;
      int len = static_cast<int>(rng() % 5);
      for (int i = 0; i < len; ++i)
        w.push_back(SignedLetter{static_cast<int>(rng() % a.alphabet_size), rng() % 2 == 0});
      return FreeGroupZSElement{FreeGroupZS::free_reduce(w),
                                static_cast<int>(rng() % a.group->order())};
    };
    for (int trial = 0; trial < 500; ++trial) {
      auto x = random_elem(), y = random_elem(), z = random_elem();
      CHECK(fg.mul(fg.mul(x, y), z) == fg.mul(x, fg.mul(y, z)));
    }
  }
  SUBCASE("extended axioms SS1-SS8 hold on signed words to depth 3") {
    for (const char* name : {"c2-flat", "c2-twist", "rees-c4-inv"}) {
      CAPTURE(name);
      const auto& a = corpus().action(name);
      FreeGroupZS fg(a);
      const int e = a.group->identity();
      // enumerate reduced signed words of length <= 3
      std::vector<std::vector<SignedLetter>> words{{}};
      for (int len = 1; len <= 3; ++len) {
        std::vector<std::vector<SignedLetter>> next;
        for (const auto& w : words) {
          if (static_cast<int>(w.size()) != len - 1) continue;
          for (int x = 0; x < a.alphabet_size; ++x)
            for (bool inv : {false, true}) {
              SignedLetter l{x, inv};
              if (!w.empty() && w.back().letter == x && w.back().inverse != inv) continue;
              auto v = w;
              v.push_back(l);
              next.push_back(v);
            }
        }
        words.insert(words.end(), next.begin(), next.end());
      }
      for (const auto& w : words) {
        CHECK(fg.act(e, w) == w);  // SS1
        CHECK(fg.res(e, w) == e);  // SS7
        for (int g = 0; g < a.group->order(); ++g) {
          for (int h = 0; h < a.group->order(); ++h) {
            int gh = a.group->mul(g, h);
            CHECK(fg.act(gh, w) == fg.act(g, fg.act(h, w)));  // SS2
            CHECK(fg.res(gh, w) ==
                  a.group->mul(fg.res(g, fg.act(h, w)), fg.res(h, w)));  // SS8
          }
          // SS4 and SS6 across all splits
          for (size_t cut = 0; cut <= w.size(); ++cut) {
            std::vector<SignedLetter> u(w.begin(), w.begin() + cut);
            std::vector<SignedLetter> v(w.begin() + cut, w.end());
            auto lhs = fg.act(g, w);
            auto first = fg.act(g, u);
            auto second = fg.act(fg.res(g, u), v);
            first.insert(first.end(), second.begin(), second.end());
            CHECK(lhs == FreeGroupZS::free_reduce(first));
            CHECK(fg.res(g, w) == fg.res(fg.res(g, u), v));
          }
        }
      }
    }
  }
}
