#include <doctest.h>

#include <map>
#include <random>

#include "coxkl/interval.hpp"
#include "coxkl/oracle.hpp"
#include "coxkl/verify.hpp"

using namespace coxkl;

namespace {

std::unique_ptr<CoxeterSystem> a3() {
  return CoxeterSystem::create(CoxeterMatrix::type_a(3));
}

}  // namespace

TEST_SUITE("interval") {

TEST_CASE("the running example interval") {
  auto sys = a3();
  ElemRef w = sys->from_word({0, 1, 2, 0});
  BruhatInterval iv = build_interval(*sys, w, gen_bit(1));
  CHECK(iv.size() == 12);
  CHECK(iv.element(0) == sys->identity());
  CHECK(iv.element(iv.size() - 1) == w);
  std::map<int, int> widths;
  int unflagged = 0;
  for (int v = 0; v < iv.size(); ++v) {
    widths[iv.poset.rank_of(v)]++;
    unflagged += iv.poset.flagged(v) ? 0 : 1;
  }
  CHECK(widths == std::map<int, int>{{0, 1}, {1, 3}, {2, 4}, {3, 3}, {4, 1}});
  CHECK(unflagged == 3);
  CHECK(iv.poset.flagged(0));
  CHECK(iv.poset.flagged(iv.size() - 1));
  // The unflagged elements are s2, s1 s2, s1 s2 s1.
  for (auto word : {std::vector<uint8_t>{1}, {0, 1}, {0, 1, 0}})
    CHECK(!iv.poset.flagged(iv.index_of(sys->from_word(word))));
}

TEST_CASE("trivial and dihedral intervals") {
  auto sys = a3();
  BruhatInterval iv = build_interval(*sys, sys->identity(), 0);
  CHECK(iv.size() == 1);

  auto d5 = CoxeterSystem::create(CoxeterMatrix::dihedral(5));
  std::vector<uint8_t> word = {0, 1, 0, 1, 0};
  ElemRef w0 = d5->from_word(word);
  BruhatInterval top = build_interval(*d5, w0, 0);
  CHECK(top.size() == 10);
  std::map<int, int> widths;
  for (int v = 0; v < top.size(); ++v) widths[top.poset.rank_of(v)]++;
  CHECK(widths ==
        std::map<int, int>{{0, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 2}, {5, 1}});
}

TEST_CASE("closure matches Bruhat order and the subword oracle") {
  auto sys = a3();
  for (auto word : {std::vector<uint8_t>{0, 1, 2, 0}, {0, 1, 0, 2, 1, 0}}) {
    BruhatInterval iv = build_interval(*sys, sys->from_word(word), 0);
    for (int u = 0; u < iv.size(); ++u)
      for (int v = 0; v < iv.size(); ++v) {
        bool leq = iv.poset.leq(u, v);
        CHECK(leq == sys->bruhat_leq(iv.element(u), iv.element(v)));
        CHECK(leq == subword_leq(*sys, iv.element(u), iv.element(v)));
      }
  }
}

TEST_CASE("coatom structure of flagged intervals") {
  auto sys = a3();
  for (GenSet H = 0; H < 8; ++H)
    for (ElemRef w : ball(*sys, 6)) {
      if (!sys->is_min_coset_rep(w, H)) continue;
      BruhatInterval iv = build_interval(*sys, w, H);
      for (int v = 1; v < iv.size(); ++v)
        CHECK(!iv.poset.down(v).empty());
      for (int v = 0; v < iv.size(); ++v) {
        if (!iv.poset.flagged(v)) {
          // An element outside the quotient has at most one flagged coatom.
          int flagged_coatoms = 0;
          for (int u : iv.poset.down(v)) flagged_coatoms += iv.poset.flagged(u);
          CHECK(flagged_coatoms <= 1);
        } else {
          // Left descents keep the quotient downward closed.
          for (Gen l : gens_of(sys->left_descents(iv.element(v)))) {
            ElemRef lu = sys->mult_gen(iv.element(v), l, Side::left);
            CHECK(iv.poset.flagged(iv.index_of(lu)));
          }
        }
      }
    }
}

TEST_CASE("size cap") {
  auto sys = a3();
  CHECK_THROWS_AS(build_interval(*sys, sys->from_word({0, 1, 2, 0}), 0, 5),
                  std::length_error);
}

TEST_CASE("abstract view and subintervals") {
  auto sys = a3();
  ElemRef w = sys->from_word({0, 1, 2, 0});
  BruhatInterval iv = build_interval(*sys, w, gen_bit(1));
  AbstractPoset p = to_abstract(iv);
  CHECK(p.n == 12);
  CHECK(p.covers.size() == iv.poset.data().covers.size());
  Poset rebuilt(p);
  CHECK(rebuilt.size() == iv.size());

  // [e, s2 s3 s1] has eight vertices (it is the top's image under the
  // non-multiplication H-special matching).
  int mv = iv.index_of(sys->from_word({1, 2, 0}));
  REQUIRE(mv >= 0);
  BruhatInterval sub = subinterval(iv, mv);
  CHECK(sub.size() == 8);
  CHECK(sub.top == sys->from_word({1, 2, 0}));
  CHECK(sub.element(0) == sys->identity());
  for (int v = 0; v < sub.size(); ++v)
    CHECK(sub.poset.flagged(v) ==
          iv.poset.flagged(iv.index_of(sub.element(v))));

  CHECK(subinterval(iv, 0).size() == 1);
}

TEST_CASE("isomorphism search") {
  auto sys = a3();
  ElemRef w = sys->from_word({0, 1, 2, 0});
  BruhatInterval iv = build_interval(*sys, w, gen_bit(1));

  // Identity case.
  auto self = find_isomorphism(iv.poset, iv.poset, true);
  REQUIRE(self.has_value());
  for (int v = 0; v < iv.size(); ++v) CHECK(iv.poset.rank_of((*self)[v]) ==
                                            iv.poset.rank_of(v));

  // The diagram automorphism s1 <-> s3 carries the interval to the interval
  // of s3 s2 s1 s3 with the same H.
  BruhatInterval mirror =
      build_interval(*sys, sys->from_word({2, 1, 0, 2}), gen_bit(1));
  auto iso = find_isomorphism(iv.poset, mirror.poset, true);
  REQUIRE(iso.has_value());
  for (auto [a, b] : iv.poset.data().covers)
    CHECK(mirror.poset.leq((*iso)[a], (*iso)[b]));

  // Distinct shapes: a chain and a diamond.
  AbstractPoset chain{4, {0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}}, {1, 1, 1, 1}};
  AbstractPoset diamond{4, {0, 1, 1, 2}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                        {1, 1, 1, 1}};
  CHECK(!find_isomorphism(Poset(chain), Poset(diamond), false).has_value());

  // Flags matter exactly when respected.
  AbstractPoset flagged = diamond;
  flagged.h = {1, 0, 1, 1};
  AbstractPoset flagged2 = diamond;
  flagged2.h = {1, 1, 0, 1};
  CHECK(find_isomorphism(Poset(flagged), Poset(flagged2), true).has_value());
  AbstractPoset unflaggable = diamond;
  unflaggable.h = {1, 0, 0, 1};
  CHECK(!find_isomorphism(Poset(flagged), Poset(unflaggable), true));
  CHECK(find_isomorphism(Poset(flagged), Poset(unflaggable), false));
}

TEST_CASE("relabeling and validation") {
  auto sys = a3();
  BruhatInterval iv = build_interval(*sys, sys->from_word({0, 1, 2, 0}), 0);
  AbstractPoset p = to_abstract(iv);
  std::mt19937 rng(7);
  std::vector<int> perm(p.n);
  for (int i = 0; i < p.n; ++i) perm[i] = i;
  for (int t = 0; t < 10; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    AbstractPoset q = relabel(p, perm);
    CHECK(find_isomorphism(Poset(p), Poset(q), true).has_value());
  }

  AbstractPoset bad{2, {0, 0}, {{0, 1}}, {1, 1}};  // cover must raise rank
  CHECK_THROWS_AS(Poset{bad}, std::invalid_argument);
  AbstractPoset two_max{3, {0, 1, 1}, {{0, 1}, {0, 2}}, {1, 1, 1}};
  CHECK_THROWS_AS(Poset{two_max}, std::invalid_argument);
}

}  // TEST_SUITE
