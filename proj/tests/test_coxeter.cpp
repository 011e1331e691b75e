#include <doctest.h>

#include <algorithm>
#include <map>

#include "coxkl/coxeter.hpp"
#include "coxkl/oracle.hpp"
#include "coxkl/verify.hpp"

using namespace coxkl;

namespace {

std::unique_ptr<CoxeterSystem> a3() {
  return CoxeterSystem::create(CoxeterMatrix::type_a(3));
}

}  // namespace

TEST_SUITE("coxeter") {

TEST_CASE("matrix validation") {
  CHECK_THROWS_AS(CoxeterSystem::create(CoxeterMatrix{0, {}}),
                  std::invalid_argument);
  CoxeterMatrix bad = CoxeterMatrix::dihedral(3);
  bad.labels[0][1] = 4;  // asymmetric
  CHECK_THROWS_AS(CoxeterSystem::create(bad), std::invalid_argument);
  bad = CoxeterMatrix::dihedral(3);
  bad.labels[0][0] = 2;
  CHECK_THROWS_AS(CoxeterSystem::create(bad), std::invalid_argument);
  bad = CoxeterMatrix::dihedral(1);  // off-diagonal 1
  CHECK_THROWS_AS(CoxeterSystem::create(bad), std::invalid_argument);
}

TEST_CASE("rank one: the two-element group") {
  CoxeterMatrix m;
  m.rank = 1;
  m.labels = {{1}};
  auto sys = CoxeterSystem::create(m);
  ElemRef s = sys->mult_gen(sys->identity(), 0, Side::left);
  CHECK(sys->length(s) == 1);
  CHECK(sys->mult_gen(s, 0, Side::left) == sys->identity());
  CHECK(sys->mult_gen(s, 0, Side::right) == sys->identity());
  CHECK(ball(*sys, 10).size() == 2);
}

TEST_CASE("A3 is the symmetric group S4") {
  auto sys = a3();
  auto all = ball(*sys, 10);
  CHECK(all.size() == 24);
  // Length generating function 1,3,5,6,5,3,1.
  std::map<int, int> by_len;
  for (ElemRef e : all) by_len[sys->length(e)]++;
  std::vector<int> expect = {1, 3, 5, 6, 5, 3, 1};
  for (int l = 0; l <= 6; ++l) CHECK(by_len[l] == expect[l]);
  // Braid and commutation relations.
  CHECK(sys->from_word({0, 1, 0}) == sys->from_word({1, 0, 1}));
  CHECK(sys->from_word({0, 2}) == sys->from_word({2, 0}));
  CHECK(sys->from_word({0, 0}) == sys->identity());
}

TEST_CASE("descents and lengths of the running example") {
  auto sys = a3();
  ElemRef w = sys->from_word({0, 1, 2, 0});
  CHECK(sys->length(w) == 4);
  CHECK(sys->left_descents(w) == (gen_bit(0) | gen_bit(1)));
  CHECK(sys->right_descents(w) == (gen_bit(0) | gen_bit(2)));
  CHECK(sys->is_min_coset_rep(w, gen_bit(1)));
  CHECK(!sys->is_min_coset_rep(sys->from_word({1}), gen_bit(1)));
  CHECK(sys->is_min_coset_rep(sys->identity(), gen_bit(1)));
  // Left multiplication by a left descent drops the length by one.
  CHECK(sys->length(sys->mult_gen(w, 0, Side::left)) == 3);
}

TEST_CASE("canonical words are ShortLex minimal reduced words") {
  auto sys = a3();
  for (ElemRef e : ball(*sys, 10)) {
    auto words = all_reduced_words(*sys, e);
    CHECK(int(sys->word(e).size()) == sys->length(e));
    auto best = *std::min_element(words.begin(), words.end());
    CHECK(sys->word(e) == best);
    // Every reduced word multiplies back to e.
    for (auto& w : words) CHECK(sys->from_word(w) == e);
  }
}

TEST_CASE("Bruhat order agrees with the subword oracle") {
  auto sys = a3();
  auto all = ball(*sys, 10);
  for (ElemRef u : all)
    for (ElemRef w : all)
      CHECK(sys->bruhat_leq(u, w) == subword_leq(*sys, u, w));
  // Selected instances; e is the minimum.
  ElemRef w = sys->from_word({0, 1, 2, 0});
  CHECK(sys->bruhat_leq(sys->identity(), w));
  CHECK(sys->bruhat_leq(sys->from_word({0}), w));
  CHECK(subword_leq(*sys, sys->from_word({1, 0, 1}), w));
  CHECK(sys->bruhat_leq(sys->from_word({1, 0, 1}), w));
}

TEST_CASE("Bruhat order in an infinite group") {
  auto sys = CoxeterSystem::create(CoxeterMatrix::dihedral(0));
  auto all = ball(*sys, 6);
  CHECK(all.size() == 13);  // 1 + 2 per length
  for (ElemRef u : all)
    for (ElemRef w : all)
      CHECK(sys->bruhat_leq(u, w) == subword_leq(*sys, u, w));
  // Alternating left multiplication never decreases length.
  ElemRef e = sys->identity();
  for (int i = 0; i < 20; ++i) {
    ElemRef f = sys->mult_gen(e, i % 2, Side::left);
    CHECK(sys->length(f) == sys->length(e) + 1);
    e = f;
  }
}

TEST_CASE("lifting property") {
  auto sys = a3();
  auto all = ball(*sys, 10);
  for (ElemRef u : all)
    for (ElemRef w : all) {
      if (!sys->bruhat_leq(u, w)) continue;
      for (Gen s = 0; s < 3; ++s) {
        ElemRef us = sys->mult_gen(u, s, Side::right);
        ElemRef ws = sys->mult_gen(w, s, Side::right);
        bool su = gen_in(sys->right_descents(u), s);
        bool sw = gen_in(sys->right_descents(w), s);
        if (su == sw) {
          CHECK(sys->bruhat_leq(us, ws));
        } else if (sw) {
          CHECK(sys->bruhat_leq(us, w));
          CHECK(sys->bruhat_leq(u, ws));
        }
      }
    }
}

TEST_CASE("parabolic decompositions") {
  auto sys = a3();
  ElemRef w = sys->from_word({0, 1, 2, 0});
  GenSet J23 = gen_bit(1) | gen_bit(2);

  auto rd = sys->decompose_right(w, J23);
  CHECK(sys->mult(rd.min_rep, rd.sub) == w);
  CHECK(sys->length(rd.min_rep) + sys->length(rd.sub) == sys->length(w));
  CHECK((sys->right_descents(rd.min_rep) & J23) == 0);
  CHECK(sys->in_parabolic(rd.sub, J23));
  // Against brute force: the minimal element of the coset w W_J.
  {
    ElemRef best = w;
    for (ElemRef v : ball(*sys, 10)) {
      if (!sys->in_parabolic(v, J23)) continue;
      ElemRef c = sys->mult(w, v);
      if (sys->length(c) < sys->length(best)) best = c;
    }
    CHECK(best == rd.min_rep);
  }

  auto ld = sys->decompose_left(w, gen_bit(0));
  CHECK(ld.sub == sys->from_word({0}));
  CHECK(ld.min_rep == sys->from_word({1, 2, 0}));

  // Degenerate subsets.
  CHECK(sys->decompose_right(w, 0).min_rep == w);
  CHECK(sys->decompose_right(w, 0).sub == sys->identity());
  CHECK(sys->decompose_right(w, full_gen_set(3)).min_rep == sys->identity());
  CHECK(sys->decompose_left(w, 0).min_rep == w);

  // Length additivity and the descent transfer rule for all (w, J).
  for (ElemRef v : ball(*sys, 10))
    for (GenSet J = 0; J < 8; ++J) {
      auto r = sys->decompose_right(v, J);
      CHECK(sys->length(r.min_rep) + sys->length(r.sub) == sys->length(v));
      auto l = sys->decompose_left(v, J);
      CHECK(sys->length(l.min_rep) + sys->length(l.sub) == sys->length(v));
      CHECK(sys->left_descents(l.sub) == (sys->left_descents(v) & J));
    }
}

TEST_CASE("order is preserved by taking coset representatives") {
  auto sys = a3();
  auto all = ball(*sys, 10);
  for (GenSet J = 0; J < 8; ++J)
    for (ElemRef v : all)
      for (ElemRef w : all) {
        if (!sys->bruhat_leq(v, w)) continue;
        CHECK(sys->bruhat_leq(sys->decompose_right(v, J).min_rep,
                              sys->decompose_right(w, J).min_rep));
        CHECK(sys->bruhat_leq(sys->decompose_left(v, J).min_rep,
                              sys->decompose_left(w, J).min_rep));
      }
}

TEST_CASE("maximal parabolic element below w") {
  auto sys = a3();
  ElemRef w = sys->from_word({0, 1, 2, 0});
  CHECK(sys->max_parabolic_below(w, 0) == sys->identity());
  ElemRef m01 = sys->max_parabolic_below(w, gen_bit(0) | gen_bit(1));
  CHECK(sys->length(m01) == 3);
  CHECK(m01 == sys->from_word({0, 1, 0}));
  // w inside the parabolic subgroup is its own maximum.
  ElemRef v = sys->from_word({1, 2, 1});
  CHECK(sys->max_parabolic_below(v, gen_bit(1) | gen_bit(2)) == v);
  // Brute force: W_J members below w.
  for (GenSet J = 0; J < 8; ++J) {
    ElemRef best = sys->identity();
    for (ElemRef x : ball(*sys, 10))
      if (sys->in_parabolic(x, J) && sys->bruhat_leq(x, w) &&
          sys->length(x) > sys->length(best))
        best = x;
    ElemRef got = sys->max_parabolic_below(w, J);
    CHECK(got == best);
    // The intersection is the full lower interval of the maximum.
    for (ElemRef x : ball(*sys, 10))
      if (sys->in_parabolic(x, J) && sys->bruhat_leq(x, w))
        CHECK(sys->bruhat_leq(x, got));
  }
}

TEST_CASE("large labels stay exact") {
  CoxeterMatrix m = CoxeterMatrix::dihedral(7);
  auto sys = CoxeterSystem::create(m);
  CHECK(sys->field().order() == 14);  // lcm(7, 2)
  // (st)^7 = e and the longest element has length 7.
  std::vector<uint8_t> word;
  for (int i = 0; i < 14; ++i) word.push_back(i % 2);
  CHECK(sys->from_word(word) == sys->identity());
  word.resize(8);
  CHECK(sys->length(sys->from_word(word)) == 6);
  word.resize(7);
  ElemRef w0 = sys->from_word(word);
  CHECK(sys->length(w0) == 7);
  CHECK(sys->left_descents(w0) == full_gen_set(2));
  CHECK(ball(*sys, 20).size() == 14);
  // Extra bracket refinement must not disturb anything.
  sys->field().refine(10);
  word.assign({0, 1, 0, 1, 0, 1, 0, 1, 0});
  CHECK(sys->length(sys->from_word(word)) == 5);
}

TEST_CASE("inverse and support") {
  auto sys = a3();
  ElemRef w = sys->from_word({0, 1, 2});
  CHECK(sys->inverse(w) == sys->from_word({2, 1, 0}));
  CHECK(sys->inverse(sys->inverse(w)) == w);
  CHECK(sys->support(w) == full_gen_set(3));
  CHECK(sys->support(sys->identity()) == 0);
  CHECK(sys->gen_leq(0, w));
  CHECK(!sys->gen_leq(2, sys->from_word({0, 1})));
}

TEST_CASE("finite and infinite parabolic subgroups") {
  auto sys = a3();
  CHECK(sys->parabolic_finite(full_gen_set(3)));
  CHECK(sys->length(sys->longest_parabolic(full_gen_set(3))) == 6);
  CHECK(sys->longest_parabolic(0) == sys->identity());

  auto inf = CoxeterSystem::create(CoxeterMatrix::dihedral(0));
  CHECK(!inf->parabolic_finite(full_gen_set(2)));
  CHECK(inf->parabolic_finite(gen_bit(0)));
  CHECK_THROWS_AS(inf->longest_parabolic(full_gen_set(2)), std::domain_error);

  // Affine (3,3,3) triangle group is infinite; icosahedral (5,3,2) is not.
  CoxeterMatrix aff;
  aff.rank = 3;
  aff.labels = {{1, 3, 3}, {3, 1, 3}, {3, 3, 1}};
  CHECK(!CoxeterSystem::create(aff)->parabolic_finite(full_gen_set(3)));
  CoxeterMatrix h3;
  h3.rank = 3;
  h3.labels = {{1, 5, 2}, {5, 1, 3}, {2, 3, 1}};
  auto hsys = CoxeterSystem::create(h3);
  CHECK(hsys->parabolic_finite(full_gen_set(3)));
  CHECK(hsys->length(hsys->longest_parabolic(full_gen_set(3))) == 15);
}

}  // TEST_SUITE
