#include "coxkl/interval.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace coxkl {

Poset::Poset(AbstractPoset data) : data_(std::move(data)) {
  int n = data_.n;
  if (n <= 0) throw std::invalid_argument("poset: empty vertex set");
  if (int(data_.rank.size()) != n || int(data_.h.size()) != n)
    throw std::invalid_argument("poset: field sizes disagree with n");
  up_.assign(n, {});
  down_.assign(n, {});
  for (auto [a, b] : data_.covers) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("poset: cover out of range");
    if (data_.rank[b] != data_.rank[a] + 1)
      throw std::invalid_argument("poset: cover does not raise rank by 1");
    up_[a].push_back(b);
    down_[b].push_back(a);
  }
  for (int v = 0; v < n; ++v) {
    std::sort(up_[v].begin(), up_[v].end());
    std::sort(down_[v].begin(), down_[v].end());
  }
  int mins = 0, maxs = 0;
  for (int v = 0; v < n; ++v) {
    if (down_[v].empty()) {
      ++mins;
      min_ = v;
      if (data_.rank[v] != 0)
        throw std::invalid_argument("poset: minimum has nonzero rank");
    }
    if (up_[v].empty()) {
      ++maxs;
      max_ = v;
    }
  }
  if (mins != 1 || maxs != 1)
    throw std::invalid_argument("poset: minimum or maximum not unique");

  by_rank_.resize(n);
  for (int v = 0; v < n; ++v) by_rank_[v] = v;
  std::stable_sort(by_rank_.begin(), by_rank_.end(),
                   [&](int a, int b) { return data_.rank[a] < data_.rank[b]; });

  words_ = size_t(n + 63) / 64;
  below_.assign(size_t(n) * words_, 0);
  for (int v : by_rank_) {
    uint64_t* row = &below_[size_t(v) * words_];
    row[v >> 6] |= uint64_t(1) << (v & 63);
    for (int u : down_[v]) {
      const uint64_t* src = &below_[size_t(u) * words_];
      for (size_t k = 0; k < words_; ++k) row[k] |= src[k];
    }
  }
}

std::vector<int> Poset::down_set(int v) const {
  std::vector<int> r;
  const uint64_t* row = &below_[size_t(v) * words_];
  for (int u = 0; u < size(); ++u)
    if ((row[u >> 6] >> (u & 63)) & 1) r.push_back(u);
  return r;
}

int BruhatInterval::index_of(ElemRef e) const {
  auto it = std::find(verts.begin(), verts.end(), e);
  return it == verts.end() ? -1 : int(it - verts.begin());
}

BruhatInterval build_interval(CoxeterSystem& sys, ElemRef w, GenSet H,
                              size_t cap) {
  int top_len = sys.length(w);
  std::vector<std::unordered_set<ElemRef>> levels(top_len + 1);
  levels[top_len].insert(w);
  std::set<std::pair<ElemRef, ElemRef>> cover_set;  // (lower, upper)
  size_t count = 1;
  for (int l = top_len; l >= 1; --l) {
    for (ElemRef v : levels[l]) {
      const auto& wd = sys.word(v);
      std::vector<uint8_t> sub;
      sub.reserve(wd.size() - 1);
      for (size_t i = 0; i < wd.size(); ++i) {
        sub.assign(wd.begin(), wd.end());
        sub.erase(sub.begin() + i);
        ElemRef u = sys.from_word(sub);
        if (sys.length(u) != l - 1) continue;  // deletion was not reduced
        cover_set.emplace(u, v);
        if (levels[l - 1].insert(u).second && ++count > cap)
          throw std::length_error("interval size cap exceeded");
      }
    }
  }

  BruhatInterval iv;
  iv.sys = &sys;
  iv.top = w;
  iv.H = H;
  for (auto& lv : levels)
    for (ElemRef e : lv) iv.verts.push_back(e);
  std::sort(iv.verts.begin(), iv.verts.end(), [&](ElemRef a, ElemRef b) {
    if (sys.length(a) != sys.length(b)) return sys.length(a) < sys.length(b);
    return sys.word(a) < sys.word(b);
  });

  std::map<ElemRef, int> index;
  for (int i = 0; i < int(iv.verts.size()); ++i) index[iv.verts[i]] = i;

  AbstractPoset p;
  p.n = int(iv.verts.size());
  p.rank.reserve(p.n);
  p.h.reserve(p.n);
  for (ElemRef e : iv.verts) {
    p.rank.push_back(sys.length(e));
    p.h.push_back(sys.is_min_coset_rep(e, H) ? 1 : 0);
  }
  for (auto [u, v] : cover_set) p.covers.emplace_back(index[u], index[v]);
  std::sort(p.covers.begin(), p.covers.end());
  iv.poset = Poset(std::move(p));
  return iv;
}

AbstractPoset to_abstract(const BruhatInterval& iv) { return iv.poset.data(); }

BruhatInterval subinterval(const BruhatInterval& iv, int top_vertex) {
  std::vector<int> keep = iv.poset.down_set(top_vertex);
  std::vector<int> new_index(iv.size(), -1);
  for (int i = 0; i < int(keep.size()); ++i) new_index[keep[i]] = i;

  AbstractPoset p;
  p.n = int(keep.size());
  for (int v : keep) {
    p.rank.push_back(iv.poset.rank_of(v));
    p.h.push_back(iv.poset.flagged(v) ? 1 : 0);
  }
  for (auto [a, b] : iv.poset.data().covers)
    if (new_index[a] >= 0 && new_index[b] >= 0)
      p.covers.emplace_back(new_index[a], new_index[b]);

  BruhatInterval sub;
  sub.sys = iv.sys;
  sub.top = iv.element(top_vertex);
  sub.H = iv.H;
  sub.poset = Poset(std::move(p));
  for (int v : keep) sub.verts.push_back(iv.element(v));
  return sub;
}

namespace {

struct IsoSearch {
  const Poset& p;
  const Poset& q;
  bool flags;
  std::vector<int> image;  // p vertex -> q vertex or -1
  std::vector<char> used;  // q side

  bool compatible(int u, int v) const {
    if (p.rank_of(u) != q.rank_of(v)) return false;
    if (flags && p.flagged(u) != q.flagged(v)) return false;
    if (p.up(u).size() != q.up(v).size()) return false;
    if (p.down(u).size() != q.down(v).size()) return false;
    // All lower covers of u are already mapped; images must be exactly the
    // lower covers of v.
    for (int d : p.down(u)) {
      int dv = image[d];
      if (!std::binary_search(q.down(v).begin(), q.down(v).end(), dv))
        return false;
    }
    return true;
  }

  bool extend(size_t pos, const std::vector<int>& order) {
    if (pos == order.size()) return true;
    int u = order[pos];
    for (int v = 0; v < q.size(); ++v) {
      if (used[v] || !compatible(u, v)) continue;
      image[u] = v;
      used[v] = 1;
      if (extend(pos + 1, order)) return true;
      image[u] = -1;
      used[v] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Poset& p,
                                                 const Poset& q,
                                                 bool respect_flags) {
  if (p.size() != q.size()) return std::nullopt;
  IsoSearch s{p, q, respect_flags,
              std::vector<int>(p.size(), -1),
              std::vector<char>(q.size(), 0)};
  // Process by rank so lower neighborhoods are always determined.
  if (!s.extend(0, p.by_rank())) return std::nullopt;
  return s.image;
}

AbstractPoset relabel(const AbstractPoset& p, const std::vector<int>& perm) {
  AbstractPoset r;
  r.n = p.n;
  r.rank.resize(p.n);
  r.h.resize(p.n);
  for (int v = 0; v < p.n; ++v) {
    r.rank[perm[v]] = p.rank[v];
    r.h[perm[v]] = p.h[v];
  }
  for (auto [a, b] : p.covers) r.covers.emplace_back(perm[a], perm[b]);
  std::sort(r.covers.begin(), r.covers.end());
  return r;
}

}  // namespace coxkl
