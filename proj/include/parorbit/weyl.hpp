// Weyl group computations that never materialize the group: everything is
// done through orbits of coweights and through words in the simple
// reflections.  A word [l0, l1, ..., lk] denotes the product
// s_{l0} s_{l1} ... s_{lk}; acting on a vector applies the rightmost letter
// first.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "parorbit/rootsys.hpp"

namespace parorbit {

struct WeylWord {
  std::vector<int> letters;  // simple root indexes, 0-based

  int size() const { return static_cast<int>(letters.size()); }
  WeylWord inverse() const {
    WeylWord w(*this);
    std::reverse(w.letters.begin(), w.letters.end());
    return w;
  }
  bool operator==(const WeylWord& o) const { return letters == o.letters; }
};

inline Coweight act(const RootSystem& R, const WeylWord& w, Coweight v) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    v = R.reflect_coweight(*it, v);
  return v;
}

inline RootVec act_root(const RootSystem& R, const WeylWord& w, RootVec v) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    v = R.reflect_root(*it, v);
  return v;
}

// Number of positive roots sent negative; equals the Coxeter length when the
// word is reduced.
inline int inversion_length(const RootSystem& R, const WeylWord& w) {
  int count = 0;
  for (int id = 0; id < R.num_positive(); ++id) {
    RootVec img = act_root(R, w, R.root(id));
    bool neg = std::all_of(img.begin(), img.end(), [](int x) { return x <= 0; });
    if (neg) ++count;
  }
  return count;
}

// Dominant representative of the orbit of v, together with a word u such
// that act(u, v) is dominant.  Reflecting only at strictly negative
// coordinates makes the word reduced, so its size is the number of positive
// roots with negative pairing against v.
inline std::pair<Coweight, WeylWord> dominant_representative(const RootSystem& R,
                                                             Coweight v) {
  WeylWord u;
  for (;;) {
    int i = -1;
    for (int j = 0; j < R.rank(); ++j)
      if (v.c[j] < 0) { i = j; break; }
    if (i < 0) break;
    v = R.reflect_coweight(i, v);
    u.letters.insert(u.letters.begin(), i);
  }
  return {v, u};
}

// Whether the longest element sends lambda to -lambda; invariant under
// replacing lambda by its dominant representative.
inline bool w0_negates(const RootSystem& R, const Coweight& lam) {
  Coweight dom = dominant_representative(R, lam).first;
  Coweight neg = dominant_representative(R, -dom).first;
  return neg == dom;
}

// Number of positive roots supported on the subset J of simple roots; this
// is the length of the longest element of the parabolic subgroup W_J.
inline int parabolic_longest_length(const RootSystem& R, const std::vector<int>& J) {
  std::vector<char> in(R.rank(), 0);
  for (int j : J) in[j] = 1;
  int count = 0;
  for (int id = 0; id < R.num_positive(); ++id) {
    const RootVec& b = R.root(id);
    bool ok = true;
    for (int k = 0; k < R.rank(); ++k)
      if (b[k] != 0 && !in[k]) { ok = false; break; }
    if (ok) ++count;
  }
  return count;
}

// Reduced word for the longest element of W_J, via the exchange walk that
// takes a J-antidominant regular point to the J-dominant one.
inline WeylWord longest_word(const RootSystem& R, const std::vector<int>& J) {
  Coweight v = Coweight::zero(R.rank());
  for (int j : J) v.c[j] = -1;
  WeylWord u;
  for (;;) {
    int pick = -1;
    for (int j : J)
      if (v.c[j] < 0) { pick = j; break; }
    if (pick < 0) break;
    v = R.reflect_coweight(pick, v);
    u.letters.insert(u.letters.begin(), pick);
  }
  check_consistent(u.size() == parabolic_longest_length(R, J),
                   "longest_word length mismatch");
  return u;
}

inline std::vector<int> full_node_set(const RootSystem& R) {
  std::vector<int> J(R.rank());
  for (int i = 0; i < R.rank(); ++i) J[i] = i;
  return J;
}

// Orbit of lam under W, as a sorted list (BFS over simple reflections).
inline std::vector<Coweight> weyl_orbit(const RootSystem& R, const Coweight& lam,
                                        size_t guard = 1000000) {
  std::set<Coweight> seen{lam};
  std::vector<Coweight> queue{lam};
  while (!queue.empty()) {
    Coweight v = queue.back();
    queue.pop_back();
    for (int i = 0; i < R.rank(); ++i) {
      Coweight w = R.reflect_coweight(i, v);
      if (seen.insert(w).second) {
        check_consistent(seen.size() <= guard, "weyl_orbit guard exceeded");
        queue.push_back(w);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

// W_J \ W / W_lam double cosets, realized as the blocks of the W_J action on
// the orbit W.lam.
struct DoubleCosets {
  std::vector<Coweight> orbit;           // full W-orbit of lambda
  std::vector<std::vector<int>> blocks;  // indexes into orbit, one per coset
};

inline DoubleCosets double_cosets(const RootSystem& R, const std::vector<int>& J,
                                  const Coweight& lam) {
  DoubleCosets out;
  out.orbit = weyl_orbit(R, lam);
  std::map<Coweight, int> pos;
  for (size_t i = 0; i < out.orbit.size(); ++i) pos[out.orbit[i]] = static_cast<int>(i);
  std::vector<int> block(out.orbit.size(), -1);
  int nblocks = 0;
  for (size_t seed = 0; seed < out.orbit.size(); ++seed) {
    if (block[seed] >= 0) continue;
    int b = nblocks++;
    std::vector<int> stack{static_cast<int>(seed)};
    block[seed] = b;
    out.blocks.emplace_back();
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      out.blocks[b].push_back(cur);
      for (int j : J) {
        Coweight w = R.reflect_coweight(j, out.orbit[cur]);
        int idx = pos.at(w);
        if (block[idx] < 0) {
          block[idx] = b;
          stack.push_back(idx);
        }
      }
    }
    std::sort(out.blocks[b].begin(), out.blocks[b].end());
  }
  return out;
}

inline int double_coset_count(const RootSystem& R, const std::vector<int>& J,
                              const Coweight& lam) {
  return static_cast<int>(double_cosets(R, J, lam).blocks.size());
}

// Data attached to one double coset: the minimal-length representative w
// (as a reduced word taking lambda to the coset), K = J cap w(J), and the
// complementary length l(w') with w' = w0(J) w0(K).
struct CosetRep {
  WeylWord w;
  int length = 0;
  std::vector<int> K;
  int wprime_length = 0;
  int dimension = 0;  // length + wprime_length
};

inline CosetRep minimal_coset_rep(const RootSystem& R, const std::vector<int>& J,
                                  const Coweight& lam,
                                  const std::vector<Coweight>& block_elems) {
  // Minimal word per element: peel mu back to the dominant lambda; the
  // resulting count is #{beta > 0 : <mu, beta> < 0}, which is the minimal
  // coset length, and the unique minimal element of the double coset
  // realizes the block minimum.
  check_consistent(!block_elems.empty(), "empty double coset block");
  std::optional<CosetRep> best;
  for (const Coweight& mu : block_elems) {
    auto [dom, u] = dominant_representative(R, mu);
    check_consistent(dom == dominant_representative(R, lam).first,
                     "coset element not in the orbit of lambda");
    WeylWord w = u.inverse();  // act(w, lambda) == mu
    if (!best || w.size() < best->length) {
      CosetRep r;
      r.w = w;
      r.length = w.size();
      best = r;
    }
  }
  CosetRep r = *best;
  check_consistent(inversion_length(R, r.w) == r.length,
                   "minimal coset word is not reduced");

  // K = J cap w(J), read off from the action of w^{-1} on simple roots.
  WeylWord winv = r.w.inverse();
  std::set<int> Jset(J.begin(), J.end());
  for (int k : J) {
    RootVec ak(R.rank(), 0);
    ak[k] = 1;
    RootVec pre = act_root(R, winv, ak);
    if (root_height(pre) == 1) {
      for (int j = 0; j < R.rank(); ++j)
        if (pre[j] == 1 && Jset.count(j)) r.K.push_back(k);
    }
  }
  std::sort(r.K.begin(), r.K.end());

  r.wprime_length = parabolic_longest_length(R, J) - parabolic_longest_length(R, r.K);
  r.dimension = r.length + r.wprime_length;
  return r;
}

}  // namespace parorbit
