#include "coxkl/coxeter.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace coxkl {

std::vector<Gen> gens_of(GenSet set) {
  std::vector<Gen> v;
  for (Gen s = 0; set; ++s, set >>= 1)
    if (set & 1) v.push_back(s);
  return v;
}

CoxeterMatrix CoxeterMatrix::dihedral(unsigned m) {
  CoxeterMatrix c;
  c.rank = 2;
  c.labels = {{1, m}, {m, 1}};
  return c;
}

CoxeterMatrix CoxeterMatrix::type_a(int rank) {
  CoxeterMatrix c;
  c.rank = rank;
  c.labels.assign(rank, std::vector<unsigned>(rank, 2));
  for (int i = 0; i < rank; ++i) {
    c.labels[i][i] = 1;
    if (i + 1 < rank) c.labels[i][i + 1] = c.labels[i + 1][i] = 3;
  }
  return c;
}

void CoxeterMatrix::validate() const {
  if (rank <= 0) throw std::invalid_argument("Coxeter matrix: rank must be >= 1");
  if (rank > 64) throw std::invalid_argument("Coxeter matrix: rank > 64 unsupported");
  if (int(labels.size()) != rank)
    throw std::invalid_argument("Coxeter matrix: label table size mismatch");
  for (int i = 0; i < rank; ++i) {
    if (int(labels[i].size()) != rank)
      throw std::invalid_argument("Coxeter matrix: label row size mismatch");
    if (labels[i][i] != 1)
      throw std::invalid_argument("Coxeter matrix: diagonal must be 1");
    for (int j = 0; j < rank; ++j) {
      if (labels[i][j] != labels[j][i])
        throw std::invalid_argument("Coxeter matrix: not symmetric");
      if (i != j && labels[i][j] == 1)
        throw std::invalid_argument("Coxeter matrix: off-diagonal label 1");
    }
  }
}

std::unique_ptr<CoxeterSystem> CoxeterSystem::create(CoxeterMatrix m) {
  m.validate();
  auto sys = std::unique_ptr<CoxeterSystem>(new CoxeterSystem);
  sys->matrix_ = std::move(m);
  const auto& cm = sys->matrix_;
  unsigned n = 2;
  for (int i = 0; i < cm.rank; ++i)
    for (int j = i + 1; j < cm.rank; ++j)
      if (cm.label(i, j) != 0) n = std::lcm(n, cm.label(i, j));
  sys->field_ = NumberField::make(n);
  const NumberField* f = sys->field_.get();

  sys->minus_two_b_.reserve(cm.rank * cm.rank);
  for (int s = 0; s < cm.rank; ++s)
    for (int t = 0; t < cm.rank; ++t) {
      if (s == t) {
        sys->minus_two_b_.push_back(FieldElem::rational(f, mpq_class(-2)));
      } else if (cm.label(s, t) == 0) {
        sys->minus_two_b_.push_back(FieldElem::rational(f, mpq_class(2)));
      } else {
        // -2B(s,t) = 2cos(pi/m) = p_{N/m}(y)
        sys->minus_two_b_.push_back(
            FieldElem(f, f->two_cos(n / cm.label(s, t))));
      }
    }

  // Materialize the identity.
  FMat id;
  id.a.reserve(cm.rank * cm.rank);
  for (int i = 0; i < cm.rank; ++i)
    for (int j = 0; j < cm.rank; ++j)
      id.a.push_back(i == j ? FieldElem::one(f) : FieldElem::zero(f));
  sys->intern(id, id);
  return sys;
}

FieldElem CoxeterSystem::b2(Gen s, Gen t) const {
  return minus_two_b_[s * matrix_.rank + t];
}

// sigma_s * m: only row s changes; new row s = sum_k (-2B)(s,k) * row k
// plus the old row s.
void CoxeterSystem::lmul_in_place(FMat& m, Gen s) const {
  int n = matrix_.rank;
  std::vector<FieldElem> row(n);
  for (int j = 0; j < n; ++j) {
    FieldElem acc = m.a[s * n + j];
    for (int k = 0; k < n; ++k) {
      const FieldElem& c = b2(s, k);
      if (c.is_zero()) continue;
      acc = acc + c * m.a[k * n + j];
    }
    row[j] = std::move(acc);
  }
  for (int j = 0; j < n; ++j) m.a[s * n + j] = std::move(row[j]);
}

// m * sigma_s: rank-one update by the old column s.
void CoxeterSystem::rmul_in_place(FMat& m, Gen s) const {
  int n = matrix_.rank;
  std::vector<FieldElem> col(n);
  for (int i = 0; i < n; ++i) col[i] = m.a[i * n + s];
  for (int j = 0; j < n; ++j) {
    const FieldElem& c = b2(s, j);
    if (c.is_zero()) continue;
    for (int i = 0; i < n; ++i) m.a[i * n + j] = m.a[i * n + j] + col[i] * c;
  }
}

// Sign of the root w(alpha_col): all coordinates of a root share one sign,
// so the first nonzero coordinate decides.
int CoxeterSystem::root_sign(const FMat& m, Gen col) const {
  int n = matrix_.rank;
  for (int i = 0; i < n; ++i) {
    int s = m.a[i * n + col].sign();
    if (s != 0) return s;
  }
  throw std::logic_error("root_sign: zero column");
}

GenSet CoxeterSystem::descents_from(const FMat& m) const {
  GenSet d = 0;
  for (Gen s = 0; s < matrix_.rank; ++s)
    if (root_sign(m, s) < 0) d |= gen_bit(s);
  return d;
}

uint64_t CoxeterSystem::fingerprint(const FMat& m) const {
  auto mix = [](uint64_t h, uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  };
  uint64_t h = 0x243f6a8885a308d3ULL;
  for (const FieldElem& e : m.a)
    for (const mpq_class& q : e.coeffs()) {
      h = mix(h, mpz_fdiv_ui(q.get_num().get_mpz_t(), 0xFFFFFFFFFFFFFFC5ULL));
      h = mix(h, mpz_fdiv_ui(q.get_den().get_mpz_t(), 0xFFFFFFFFFFFFFFC5ULL));
      h = mix(h, uint64_t(sgn(q) + 1));
    }
  return h;
}

ElemRef CoxeterSystem::intern(FMat mat, FMat imat) {
  uint64_t fp = fingerprint(mat);
  if (auto it = mat_index_.find(fp); it != mat_index_.end())
    for (ElemRef c : it->second)
      if (elems_[c].mat.a == mat.a) return c;

  GenSet dr = descents_from(mat);
  GenSet dl = descents_from(imat);

  Elem e;
  e.lmul.assign(matrix_.rank, kNoElem);
  e.rmul.assign(matrix_.rank, kNoElem);
  if (dl == 0) {
    // Only the identity has no descents.
    e.length = 0;
  } else {
    Gen s0 = Gen(std::countr_zero(dl));
    FMat cmat = mat, cimat = imat;
    lmul_in_place(cmat, s0);
    rmul_in_place(cimat, s0);
    ElemRef child = intern(std::move(cmat), std::move(cimat));
    e.word.push_back(uint8_t(s0));
    const auto& cw = elems_[child].word;
    e.word.insert(e.word.end(), cw.begin(), cw.end());
    e.length = elems_[child].length + 1;
    e.lmul[s0] = child;
  }
  e.dl = dl;
  e.dr = dr;
  for (uint8_t s : e.word) e.supp |= gen_bit(s);
  e.mat = std::move(mat);
  e.imat = std::move(imat);

  ElemRef ref = ElemRef(elems_.size());
  if (!e.word.empty()) {
    ElemRef child = e.lmul[e.word[0]];
    elems_[child].lmul[e.word[0]] = ref;
  }
  mat_index_[fp].push_back(ref);
  word_index_.emplace(std::string(e.word.begin(), e.word.end()), ref);
  elems_.push_back(std::move(e));
  return ref;
}

ElemRef CoxeterSystem::mult_gen(ElemRef e, Gen s, Side side) {
  if (s < 0 || s >= matrix_.rank) throw std::invalid_argument("bad generator");
  Elem& el = elems_[e];
  ElemRef& cache = side == Side::left ? el.lmul[s] : el.rmul[s];
  if (cache != kNoElem) return cache;
  FMat mat = el.mat, imat = el.imat;
  if (side == Side::left) {
    lmul_in_place(mat, s);
    rmul_in_place(imat, s);
  } else {
    rmul_in_place(mat, s);
    lmul_in_place(imat, s);
  }
  ElemRef r = intern(std::move(mat), std::move(imat));
  // Deques keep references stable, but intern may still have created the
  // element and filled the link already; write through fresh references.
  (side == Side::left ? elems_[e].lmul[s] : elems_[e].rmul[s]) = r;
  (side == Side::left ? elems_[r].lmul[s] : elems_[r].rmul[s]) = e;
  return r;
}

ElemRef CoxeterSystem::mult_word(ElemRef e, std::span<const uint8_t> letters) {
  for (uint8_t s : letters) e = mult_gen(e, Gen(s), Side::right);
  return e;
}

ElemRef CoxeterSystem::from_word(std::span<const uint8_t> letters) {
  return mult_word(identity(), letters);
}

ElemRef CoxeterSystem::from_word(std::initializer_list<int> letters) {
  ElemRef e = identity();
  for (int s : letters) e = mult_gen(e, Gen(s), Side::right);
  return e;
}

ElemRef CoxeterSystem::mult(ElemRef a, ElemRef b) {
  return mult_word(a, word(b));
}

ElemRef CoxeterSystem::inverse(ElemRef e) {
  if (elems_[e].inv != kNoElem) return elems_[e].inv;
  std::vector<uint8_t> rev(word(e).rbegin(), word(e).rend());
  ElemRef r = from_word(rev);
  elems_[e].inv = r;
  elems_[r].inv = e;
  return r;
}

bool CoxeterSystem::bruhat_leq(ElemRef u, ElemRef w) {
  if (u == w) return true;
  if (length(u) >= length(w)) return false;
  if (u == identity()) return true;
  uint64_t key = (uint64_t(uint32_t(u)) << 32) | uint32_t(w);
  if (auto it = leq_memo_.find(key); it != leq_memo_.end()) return it->second;
  Gen s = Gen(std::countr_zero(left_descents(w)));
  ElemRef w1 = mult_gen(w, s, Side::left);
  ElemRef u1 = gen_in(left_descents(u), s) ? mult_gen(u, s, Side::left) : u;
  bool r = bruhat_leq(u1, w1);
  leq_memo_.emplace(key, r);
  return r;
}

RightDecomposition CoxeterSystem::decompose_right(ElemRef w, GenSet J) {
  ElemRef c = w;
  std::vector<uint8_t> peeled;
  while (GenSet d = right_descents(c) & J) {
    Gen j = Gen(std::countr_zero(d));
    c = mult_gen(c, j, Side::right);
    peeled.push_back(uint8_t(j));
  }
  std::reverse(peeled.begin(), peeled.end());
  return {c, from_word(peeled)};
}

LeftDecomposition CoxeterSystem::decompose_left(ElemRef w, GenSet J) {
  ElemRef c = w;
  std::vector<uint8_t> peeled;
  while (GenSet d = left_descents(c) & J) {
    Gen j = Gen(std::countr_zero(d));
    c = mult_gen(c, j, Side::left);
    peeled.push_back(uint8_t(j));
  }
  return {from_word(peeled), c};
}

ElemRef CoxeterSystem::max_parabolic_below(ElemRef w, GenSet J) {
  if (in_parabolic(w, J)) return w;
  std::vector<ElemRef> frontier = {identity()};
  std::unordered_map<ElemRef, bool> seen = {{identity(), true}};
  ElemRef best = identity();
  while (!frontier.empty()) {
    std::vector<ElemRef> next;
    for (ElemRef x : frontier)
      for (Gen j : gens_of(J)) {
        if (gen_in(right_descents(x), j)) continue;
        ElemRef y = mult_gen(x, j, Side::right);
        if (seen.count(y) || !bruhat_leq(y, w)) continue;
        seen[y] = true;
        next.push_back(y);
        if (length(y) > length(best)) best = y;
      }
    frontier = std::move(next);
  }
  // W_J \cap [e,w] is an interval [e, w0(J)]; the max is unique.
  for (const auto& [x, _] : seen)
    if (length(x) == length(best) && x != best)
      throw std::logic_error("max_parabolic_below: maximum not unique");
  return best;
}

bool CoxeterSystem::parabolic_finite(GenSet J) const {
  auto gens = gens_of(J);
  int k = int(gens.size());
  if (k == 0) return true;
  const NumberField* f = field_.get();
  // Gram matrix of the bilinear form restricted to J: B = -(1/2)(-2B).
  std::vector<FieldElem> g(k * k, FieldElem::zero(f));
  mpq_class mhalf(-1, 2);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      g[i * k + j] = FieldElem::rational(f, mhalf) * b2(gens[i], gens[j]);
  // Positive definite iff all pivots of symmetric elimination are positive.
  for (int p = 0; p < k; ++p) {
    if (g[p * k + p].sign() <= 0) return false;
    FieldElem inv = g[p * k + p].inverse();
    for (int i = p + 1; i < k; ++i) {
      FieldElem factor = g[i * k + p] * inv;
      for (int j = p; j < k; ++j)
        g[i * k + j] = g[i * k + j] - factor * g[p * k + j];
    }
  }
  return true;
}

ElemRef CoxeterSystem::longest_parabolic(GenSet J) {
  if (!parabolic_finite(J))
    throw std::domain_error("longest_parabolic: the subgroup is infinite");
  ElemRef c = identity();
  for (size_t guard = 0;; ++guard) {
    GenSet up = J & ~right_descents(c);
    if (!up) return c;
    c = mult_gen(c, Gen(std::countr_zero(up)), Side::right);
    if (guard > 100000000)
      throw std::logic_error("longest_parabolic: ascent did not terminate");
  }
}

}  // namespace coxkl
