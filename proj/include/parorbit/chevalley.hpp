// Chevalley basis with integer structure constants.  Signs are fixed the
// classical way: order the positive roots by height (lexicographic
// tie-break), give every non-simple positive root its extraspecial
// decomposition, set that constant to +(p+1), and propagate all remaining
// constants through the standard four-root identity.  Everything else
// (mixed-sign pairs, magnitudes, Jacobi) is forced and checked.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "parorbit/rootsys.hpp"
#include "parorbit/weyl.hpp"

namespace parorbit {

// Signed root handle: positive root id+1, or -(id+1) for its negative.
using SRoot = int;

inline SRoot sroot(int id, int sign) { return sign > 0 ? id + 1 : -(id + 1); }
inline int sroot_id(SRoot a) { return (a > 0 ? a : -a) - 1; }
inline int sroot_sign(SRoot a) { return a > 0 ? 1 : -1; }

inline RootVec sroot_vec(const RootSystem& R, SRoot a) {
  RootVec v = R.root(sroot_id(a));
  if (a < 0)
    for (auto& x : v) x = -x;
  return v;
}

enum class TieBreak { Lex, RevLex };

namespace detail {

struct Frac {
  long long n = 0, d = 1;
  static Frac of(long long v) { return {v, 1}; }
  void reduce() {
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
  }
  Frac operator*(const Frac& o) const {
    Frac r{n * o.n, d * o.d};
    r.reduce();
    return r;
  }
  Frac operator/(const Frac& o) const {
    check_consistent(o.n != 0, "division by zero fraction");
    Frac r{n * o.d, d * o.n};
    r.reduce();
    return r;
  }
  Frac operator+(const Frac& o) const {
    Frac r{n * o.d + o.n * d, d * o.d};
    r.reduce();
    return r;
  }
  long long as_int() const {
    check_consistent(d == 1, "expected integral value");
    return n;
  }
};

}  // namespace detail

class ChevalleyBasis {
 public:
  static ChevalleyBasis build(const RootSystem& R, TieBreak tie = TieBreak::Lex) {
    ChevalleyBasis cb;
    cb.npos_ = R.num_positive();
    cb.build_order(R, tie);
    cb.build_positive_table(R);
    cb.extend_signed_table(R);
    cb.validate(R);
    return cb;
  }

  // Structure constant N(a, b) with [X_a, X_b] = N(a, b) X_{a+b}; requires
  // a + b to be a root.
  int n_const(SRoot a, SRoot b) const {
    auto it = table_.find(key(a, b));
    check_consistent(it != table_.end(), "structure constant not tabulated");
    return it->second;
  }

  bool has_pair(SRoot a, SRoot b) const { return table_.count(key(a, b)) != 0; }

  // Chain length p = max{k : b - k a is a root}; |N(a, b)| must equal p + 1.
  static int chain_down(const RootSystem& R, SRoot a, SRoot b) {
    RootVec va = sroot_vec(R, a), vb = sroot_vec(R, b);
    int p = 0;
    for (;;) {
      for (int i = 0; i < R.rank(); ++i) vb[i] -= va[i];
      if (!R.is_root(vb)) break;
      ++p;
    }
    return p;
  }

  // Test-only hook: flipping one sign must break the Jacobi identity.
  std::map<std::pair<SRoot, SRoot>, int>& mutable_table() { return table_; }
  const std::map<std::pair<SRoot, SRoot>, int>& raw_table() const { return table_; }

 private:
  static std::pair<SRoot, SRoot> key(SRoot a, SRoot b) { return {a, b}; }

  void build_order(const RootSystem& R, TieBreak tie) {
    order_.resize(npos_);
    std::vector<int> ids(npos_);
    for (int i = 0; i < npos_; ++i) ids[i] = i;
    std::sort(ids.begin(), ids.end(), [&](int x, int y) {
      int hx = R.height(x), hy = R.height(y);
      if (hx != hy) return hx < hy;
      if (tie == TieBreak::Lex) return R.root(x) < R.root(y);
      return R.root(y) < R.root(x);
    });
    for (int pos = 0; pos < npos_; ++pos) order_[ids[pos]] = pos;
  }

  static RootVec add_vec(const RootVec& a, const RootVec& b) {
    RootVec v(a);
    for (size_t i = 0; i < v.size(); ++i) v[i] += b[i];
    return v;
  }
  static RootVec sub_vec(const RootVec& a, const RootVec& b) {
    RootVec v(a);
    for (size_t i = 0; i < v.size(); ++i) v[i] -= b[i];
    return v;
  }

  // N for any signed pair, reduced to already-tabulated positive pairs.
  // Positive pairs must have smaller-height sums than anything still being
  // filled in, which the height-ordered build loop guarantees.
  detail::Frac signed_n(const RootSystem& R, SRoot a, SRoot b) const {
    using detail::Frac;
    if (a > 0 && b > 0) {
      auto it = table_.find(key(a, b));
      check_consistent(it != table_.end(), "positive pair not yet tabulated");
      return Frac::of(it->second);
    }
    if (a < 0 && b < 0) {
      Frac f = signed_n(R, -a, -b);
      return Frac{-f.n, f.d};
    }
    if (a < 0 && b > 0) {
      Frac f = signed_n(R, b, a);
      return Frac{-f.n, f.d};
    }
    // a > 0, b < 0
    RootVec vs = add_vec(sroot_vec(R, a), sroot_vec(R, b));
    int hs = root_height(vs);
    check_consistent(hs != 0, "signed_n on opposite roots");
    auto id_of = [&](const RootVec& v) {
      RootVec w(v);
      if (root_height(w) < 0)
        for (auto& x : w) x = -x;
      auto idx = R.find_positive(w);
      check_consistent(idx.has_value(), "signed_n: sum is not a root");
      return *idx;
    };
    long ss = R.norm2(vs);
    if (hs > 0) {
      // N(a, b) = -(s,s)/(a,a) N(-b, s) with -b, s positive.
      int s_id = id_of(vs);
      Frac f = signed_n(R, -b, sroot(s_id, +1));
      Frac c{-ss, R.norm2(sroot_vec(R, a))};
      return c * f;
    }
    // N(a, b) = -(s,s)/(b,b) N(a, -s) with a, -s positive.
    int s_id = id_of(vs);
    Frac f = signed_n(R, a, sroot(s_id, +1));
    Frac c{-ss, R.norm2(sroot_vec(R, b))};
    return c * f;
  }

  void build_positive_table(const RootSystem& R) {
    using detail::Frac;
    std::vector<int> by_height(npos_);
    for (int i = 0; i < npos_; ++i) by_height[i] = i;
    std::sort(by_height.begin(), by_height.end(),
              [&](int x, int y) { return R.height(x) < R.height(y); });

    for (int gid : by_height) {
      if (R.height(gid) < 2) continue;
      const RootVec& g = R.root(gid);

      // All decompositions of g as an ordered sum of two positive roots.
      std::vector<std::pair<int, int>> pairs;
      for (int a = 0; a < npos_; ++a) {
        RootVec rest = sub_vec(g, R.root(a));
        bool nonneg = std::all_of(rest.begin(), rest.end(),
                                  [](int x) { return x >= 0; });
        if (!nonneg || root_height(rest) <= 0) continue;
        auto b = R.find_positive(rest);
        if (b && *b != a) pairs.emplace_back(a, *b);
      }
      check_consistent(!pairs.empty(), "no decomposition for non-simple root");

      auto extra = *std::min_element(pairs.begin(), pairs.end(),
                                     [&](const auto& p, const auto& q) {
                                       return order_[p.first] < order_[q.first];
                                     });
      int ea = extra.first, eb = extra.second;
      int p = chain_down(R, sroot(ea, +1), sroot(eb, +1));
      set_pair(sroot(ea, +1), sroot(eb, +1), p + 1);

      for (const auto& [xa, xb] : pairs) {
        if (order_[xa] >= order_[xb]) continue;  // filled by antisymmetry
        if (xa == ea) continue;                  // the extraspecial pair itself
        // Four-root identity on (xi, eta, -alpha, -beta) with xi + eta =
        // alpha + beta = g; both cross terms reference sums of smaller height.
        Frac total = Frac::of(0);
        RootVec d1 = sub_vec(R.root(xb), R.root(ea));  // eta - alpha
        if (R.is_root(d1)) {
          Frac t = signed_n(R, sroot(xb, +1), sroot(ea, -1)) *
                   signed_n(R, sroot(xa, +1), sroot(eb, -1));
          total = total + t / Frac::of(R.norm2(d1));
        }
        RootVec d2 = sub_vec(R.root(xa), R.root(ea));  // xi - alpha
        if (R.is_root(d2)) {
          Frac t = signed_n(R, sroot(ea, -1), sroot(xa, +1)) *
                   signed_n(R, sroot(xb, +1), sroot(eb, -1));
          total = total + t / Frac::of(R.norm2(d2));
        }
        Frac nval = Frac::of(R.norm2(g)) * total / signed_n(R, sroot(ea, +1), sroot(eb, +1));
        set_pair(sroot(xa, +1), sroot(xb, +1), static_cast<int>(nval.as_int()));
      }
    }
  }

  void set_pair(SRoot a, SRoot b, int val) {
    table_[key(a, b)] = val;
    table_[key(b, a)] = -val;
  }

  void extend_signed_table(const RootSystem& R) {
    for (int ia = 0; ia < npos_; ++ia)
      for (int sa : {+1, -1})
        for (int ib = 0; ib < npos_; ++ib)
          for (int sb : {+1, -1}) {
            SRoot a = sroot(ia, sa), b = sroot(ib, sb);
            if (a > 0 && b > 0) continue;  // already present
            RootVec sum = add_vec(sroot_vec(R, a), sroot_vec(R, b));
            if (root_height(sum) == 0 || !R.is_root(sum)) continue;
            table_[key(a, b)] = static_cast<int>(signed_n(R, a, b).as_int());
          }
  }

  void validate(const RootSystem& R) const {
    for (const auto& [k, v] : table_) {
      auto [a, b] = k;
      check_consistent(v != 0, "zero structure constant stored");
      check_consistent(table_.at(key(b, a)) == -v, "antisymmetry");
      check_consistent(table_.at(key(-a, -b)) == -v, "opposite-pair rule");
      int p = chain_down(R, a, b);
      check_consistent((v < 0 ? -v : v) == p + 1, "|N| != p + 1");
    }
  }

  int npos_ = 0;
  std::vector<int> order_;  // position of each positive root id in the sign order
  std::map<std::pair<SRoot, SRoot>, int> table_;
};

// Element of the Lie algebra, written over the Chevalley basis: a Cartan
// part (a coweight) plus integer coefficients on root vectors.
struct AlgebraElement {
  Coweight cartan;
  std::map<SRoot, int> roots;

  static AlgebraElement zero(int rank) {
    AlgebraElement e;
    e.cartan = Coweight::zero(rank);
    return e;
  }
  static AlgebraElement from_cartan(Coweight h) {
    AlgebraElement e;
    e.cartan = std::move(h);
    return e;
  }
  static AlgebraElement root_vector(int rank, SRoot a, int coeff = 1) {
    AlgebraElement e = zero(rank);
    if (coeff != 0) e.roots[a] = coeff;
    return e;
  }

  bool is_zero() const { return cartan.is_zero() && roots.empty(); }
  bool operator==(const AlgebraElement& o) const {
    return cartan == o.cartan && roots == o.roots;
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    cartan += o.cartan;
    for (const auto& [r, c] : o.roots) {
      int v = (roots[r] += c);
      if (v == 0) roots.erase(r);
    }
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator*(int s, AlgebraElement a) {
    if (s == 0) return zero(a.cartan.size());
    a.cartan = s * a.cartan;
    for (auto& [r, c] : a.roots) c *= s;
    return a;
  }
  friend AlgebraElement operator-(AlgebraElement a) { return -1 * std::move(a); }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a + (-b);
  }
};

inline Coweight signed_coroot(const RootSystem& R, SRoot a) {
  Coweight w = R.coroot(sroot_id(a));
  return a > 0 ? w : -w;
}

inline AlgebraElement bracket(const RootSystem& R, const ChevalleyBasis& cb,
                              const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out = AlgebraElement::zero(R.rank());
  for (const auto& [a, ca] : x.roots) {
    for (const auto& [b, cb2] : y.roots) {
      if (a == -b) {
        out.cartan += (ca * cb2) * signed_coroot(R, a);
        continue;
      }
      RootVec sum = sroot_vec(R, a);
      const RootVec vb = sroot_vec(R, b);
      for (int i = 0; i < R.rank(); ++i) sum[i] += vb[i];
      if (!R.is_root(sum)) continue;
      int sign = root_height(sum) > 0 ? +1 : -1;
      RootVec abs(sum);
      if (sign < 0)
        for (auto& t : abs) t = -t;
      SRoot s = sroot(*R.find_positive(abs), sign);
      int v = (out.roots[s] += ca * cb2 * cb.n_const(a, b));
      if (v == 0) out.roots.erase(s);
    }
  }
  if (!x.cartan.is_zero())
    for (const auto& [b, cb2] : y.roots) {
      int p = RootSystem::pairing(x.cartan, sroot_vec(R, b));
      if (p == 0) continue;
      int v = (out.roots[b] += p * cb2);
      if (v == 0) out.roots.erase(b);
    }
  if (!y.cartan.is_zero())
    for (const auto& [a, ca] : x.roots) {
      int p = RootSystem::pairing(y.cartan, sroot_vec(R, a));
      if (p == 0) continue;
      int v = (out.roots[a] -= p * ca);
      if (v == 0) out.roots.erase(a);
    }
  return out;
}

struct LieTriple {
  AlgebraElement e, f;
  Coweight h;
};

inline bool strongly_orthogonal(const RootSystem& R, const RootVec& a,
                                const RootVec& b) {
  RootVec sum(a), dif(a);
  for (size_t i = 0; i < a.size(); ++i) {
    sum[i] += b[i];
    dif[i] -= b[i];
  }
  return !R.is_root(sum) && !R.is_root(dif) && root_height(dif) != 0;
}

// e = sum of X_gamma, h = sum of coroots, f = sum of X_{-gamma}; requires the
// given roots to be pairwise strongly orthogonal.
inline LieTriple adapted_triple(const RootSystem& R, const std::vector<int>& roots) {
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      check_consistent(strongly_orthogonal(R, R.root(roots[i]), R.root(roots[j])),
                       "adapted_triple: roots not strongly orthogonal");
  LieTriple t;
  t.e = AlgebraElement::zero(R.rank());
  t.f = AlgebraElement::zero(R.rank());
  t.h = Coweight::zero(R.rank());
  for (int id : roots) {
    t.e.roots[sroot(id, +1)] = 1;
    t.f.roots[sroot(id, -1)] = 1;
    t.h += R.coroot(id);
  }
  return t;
}

// [e,f] = h, [h,e] = 2e, [h,f] = -2f.
inline bool sl2_relations_hold(const RootSystem& R, const ChevalleyBasis& cb,
                               const LieTriple& t) {
  AlgebraElement h = AlgebraElement::from_cartan(t.h);
  if (!(bracket(R, cb, t.e, t.f) == h)) return false;
  if (!(bracket(R, cb, h, t.e) == 2 * t.e)) return false;
  if (!(bracket(R, cb, h, t.f) == -2 * t.f)) return false;
  return true;
}

// Fraction-free Gaussian elimination (Bareiss); exact rank over the rationals.
inline int matrix_rank(std::vector<std::vector<long long>> m) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  long long prev = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int cc = c + 1; cc < cols; ++cc) {
        __int128 v = static_cast<__int128>(m[rank][c]) * m[r][cc] -
                     static_cast<__int128>(m[r][c]) * m[rank][cc];
        v /= prev;
        check_consistent(v <= INT64_MAX && v >= INT64_MIN, "rank overflow");
        m[r][cc] = static_cast<long long>(v);
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

// Dimension of the orbit of x under the Levi factor of the parabolic at
// `node`: rank of b |-> [b, x] from the level-0 subalgebra into level 1.
inline int orbit_dimension_tangent(const RootSystem& R, const ChevalleyBasis& cb,
                                   const AlgebraElement& x, int node) {
  std::vector<int> level1;
  for (int id = 0; id < R.num_positive(); ++id)
    if (R.root(id)[node] == 1) level1.push_back(id);
  std::map<int, int> col_of;
  for (size_t i = 0; i < level1.size(); ++i) col_of[level1[i]] = static_cast<int>(i);

  for (const auto& [a, c] : x.roots) {
    (void)c;
    check_consistent(a > 0 && col_of.count(sroot_id(a)), "x not in level 1");
  }

  std::vector<AlgebraElement> basis0;
  for (int k = 0; k < R.rank(); ++k)
    basis0.push_back(AlgebraElement::from_cartan(R.fundamental_coweight(k)));
  for (int id = 0; id < R.num_positive(); ++id)
    if (R.root(id)[node] == 0) {
      basis0.push_back(AlgebraElement::root_vector(R.rank(), sroot(id, +1)));
      basis0.push_back(AlgebraElement::root_vector(R.rank(), sroot(id, -1)));
    }

  std::vector<std::vector<long long>> rows;
  for (const auto& b : basis0) {
    AlgebraElement im = bracket(R, cb, b, x);
    check_consistent(im.cartan.is_zero(), "image has Cartan part");
    std::vector<long long> row(level1.size(), 0);
    for (const auto& [a, c] : im.roots) {
      check_consistent(a > 0 && col_of.count(sroot_id(a)), "image leaves level 1");
      row[col_of.at(sroot_id(a))] = c;
    }
    rows.push_back(std::move(row));
  }
  return matrix_rank(std::move(rows));
}

// Exhaustive Jacobi check over basis triples; returns the number of
// violations found (0 for a consistent table).
inline long jacobi_violation_count(const RootSystem& R, const ChevalleyBasis& cb,
                                   long stop_after = 1) {
  std::vector<AlgebraElement> basis;
  for (int k = 0; k < R.rank(); ++k)
    basis.push_back(AlgebraElement::from_cartan(R.fundamental_coweight(k)));
  for (int id = 0; id < R.num_positive(); ++id) {
    basis.push_back(AlgebraElement::root_vector(R.rank(), sroot(id, +1)));
    basis.push_back(AlgebraElement::root_vector(R.rank(), sroot(id, -1)));
  }
  long bad = 0;
  size_t n = basis.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      AlgebraElement xy = bracket(R, cb, basis[i], basis[j]);
      for (size_t k = j + 1; k < n; ++k) {
        AlgebraElement s = bracket(R, cb, xy, basis[k]);
        s += bracket(R, cb, bracket(R, cb, basis[j], basis[k]), basis[i]);
        s += bracket(R, cb, bracket(R, cb, basis[k], basis[i]), basis[j]);
        if (!s.is_zero()) {
          if (++bad >= stop_after) return bad;
        }
      }
    }
  return bad;
}

}  // namespace parorbit
