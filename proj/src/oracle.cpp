#include "coxkl/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "coxkl/interval.hpp"

namespace coxkl {

namespace {

bool subword_search(CoxeterSystem& sys, ElemRef u,
                    const std::vector<uint8_t>& word, size_t i,
                    std::map<std::pair<ElemRef, size_t>, bool>& memo) {
  if (u == sys.identity()) return true;
  if (sys.length(u) > int(word.size() - i)) return false;
  auto key = std::make_pair(u, i);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Gen s = Gen(word[i]);
  bool r = subword_search(sys, u, word, i + 1, memo);
  if (!r && gen_in(sys.left_descents(u), s))
    r = subword_search(sys, sys.mult_gen(u, s, Side::left), word, i + 1, memo);
  memo[key] = r;
  return r;
}

}  // namespace

bool subword_leq(CoxeterSystem& sys, ElemRef u, ElemRef w) {
  std::map<std::pair<ElemRef, size_t>, bool> memo;
  return subword_search(sys, u, sys.word(w), 0, memo);
}

namespace {

struct BruteForce {
  const Poset& p;
  std::vector<std::vector<char>> reach;  // recomputed here, not shared
  Matching m;
  std::vector<Matching> out;

  explicit BruteForce(const Poset& poset) : p(poset) {
    int n = p.size();
    reach.assign(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v) {
      // DFS down from v.
      std::vector<int> stack = {v};
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (reach[v][x]) continue;
        reach[v][x] = 1;
        for (int d : p.down(x)) stack.push_back(d);
      }
    }
    m.assign(n, -1);
  }

  bool special() const {
    for (auto [a, b] : p.data().covers) {
      if (m[a] == b) continue;
      if (!reach[m[b]][m[a]]) return false;
    }
    return true;
  }

  void search(int pos) {
    while (pos < p.size() && m[pos] >= 0) ++pos;
    if (pos == p.size()) {
      if (special()) out.push_back(m);
      return;
    }
    for (int v : p.down(pos)) {
      if (m[v] >= 0) continue;
      m[pos] = v;
      m[v] = pos;
      search(pos + 1);
      m[pos] = -1;
      m[v] = -1;
    }
    for (int v : p.up(pos)) {
      if (m[v] >= 0) continue;
      m[pos] = v;
      m[v] = pos;
      search(pos + 1);
      m[pos] = -1;
      m[v] = -1;
    }
  }
};

}  // namespace

std::vector<Matching> brute_force_special_matchings(const Poset& p) {
  BruteForce bf(p);
  bf.search(0);
  // Normalize the order for comparisons against the pruned enumerator.
  std::sort(bf.out.begin(), bf.out.end());
  return bf.out;
}

std::vector<std::vector<uint8_t>> all_reduced_words(CoxeterSystem& sys,
                                                    ElemRef e) {
  if (e == sys.identity()) return {{}};
  std::vector<std::vector<uint8_t>> words;
  for (Gen s : gens_of(sys.left_descents(e))) {
    ElemRef rest = sys.mult_gen(e, s, Side::left);
    for (auto w : all_reduced_words(sys, rest)) {
      w.insert(w.begin(), uint8_t(s));
      words.push_back(std::move(w));
    }
  }
  return words;
}

const std::vector<ElemRef>& MuRecursionKL::below(ElemRef w) {
  auto it = below_.find(w);
  if (it != below_.end()) return it->second;
  BruhatInterval iv = build_interval(sys_, w, 0);
  return below_.emplace(w, iv.verts).first->second;
}

mpz_class MuRecursionKL::mu(ElemRef z, ElemRef v) {
  int d = sys_.length(v) - sys_.length(z);
  if (d <= 0 || d % 2 == 0) return 0;
  return P(z, v).coeff((d - 1) / 2);
}

PolyZ MuRecursionKL::P(ElemRef u, ElemRef w) {
  if (!sys_.bruhat_leq(u, w)) return PolyZ::zero();
  if (u == w) return PolyZ::one();
  auto key = std::make_pair(u, w);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Gen s = Gen(std::countr_zero(sys_.left_descents(w)));
  ElemRef v = sys_.mult_gen(w, s, Side::left);  // sw
  ElemRef su = sys_.mult_gen(u, s, Side::left);
  int c = sys_.length(su) < sys_.length(u) ? 1 : 0;
  PolyZ val = P(su, v).shifted(1 - c) + P(u, v).shifted(c);
  for (ElemRef z : below(v)) {
    if (sys_.length(sys_.mult_gen(z, s, Side::left)) > sys_.length(z))
      continue;  // need sz < z
    if (!sys_.bruhat_leq(u, z)) continue;
    mpz_class m = mu(z, v);
    if (m == 0) continue;
    int half = (sys_.length(w) - sys_.length(z)) / 2;
    val -= PolyZ({m}) * P(u, z).shifted(half);
  }
  memo_[key] = val;
  return val;
}

}  // namespace coxkl
