// Reduced root systems of types A-E with everything kept in exact integer
// arithmetic.  Roots are coefficient vectors over the simple roots; weights
// for the coadjoint side live in fundamental-coweight coordinates, so every
// pairing is a plain integer dot product.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "parorbit/error.hpp"

namespace parorbit {

enum class Kind : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E' };

inline char kind_char(Kind k) { return static_cast<char>(k); }

inline Kind kind_from_char(char c) {
  switch (c) {
    case 'A': return Kind::A;
    case 'B': return Kind::B;
    case 'C': return Kind::C;
    case 'D': return Kind::D;
    case 'E': return Kind::E;
    default: throw ConfigError(std::string("unknown type letter '") + c + "'");
  }
}

// Coefficients of a root (or any root-lattice vector) over the simple roots.
using RootVec = std::vector<int>;

// A vector in the cocharacter side, written in fundamental-coweight
// coordinates: entry j is the pairing with the simple root alpha_j.
struct Coweight {
  std::vector<int> c;

  Coweight() = default;
  explicit Coweight(std::vector<int> v) : c(std::move(v)) {}
  static Coweight zero(int rank) { return Coweight(std::vector<int>(rank, 0)); }

  int size() const { return static_cast<int>(c.size()); }
  bool operator==(const Coweight& o) const { return c == o.c; }
  bool operator!=(const Coweight& o) const { return c != o.c; }
  bool operator<(const Coweight& o) const { return c < o.c; }

  Coweight& operator+=(const Coweight& o) {
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  Coweight& operator-=(const Coweight& o) {
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
  friend Coweight operator+(Coweight a, const Coweight& b) { return a += b; }
  friend Coweight operator-(Coweight a, const Coweight& b) { return a -= b; }
  friend Coweight operator-(Coweight a) {
    for (auto& x : a.c) x = -x;
    return a;
  }
  friend Coweight operator*(int s, Coweight a) {
    for (auto& x : a.c) x *= s;
    return a;
  }
  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
  }
  bool is_dominant() const {
    return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
  }
};

inline int root_height(const RootVec& v) {
  return std::accumulate(v.begin(), v.end(), 0);
}

class RootSystem {
 public:
  static constexpr int kMaxRank = 8;

  static RootSystem build(Kind kind, int rank) {
    RootSystem r;
    r.kind_ = kind;
    r.rank_ = rank;
    r.check_supported();
    r.make_cartan();
    r.make_symmetrizers();
    r.generate_roots();
    r.validate();
    return r;
  }

  Kind kind() const { return kind_; }
  int rank() const { return rank_; }
  std::string name() const {
    return std::string(1, kind_char(kind_)) + std::to_string(rank_);
  }

  // cartan(i, j) = pairing of the i-th simple coroot with alpha_j.
  int cartan(int i, int j) const { return cartan_[i][j]; }
  int symmetrizer(int i) const { return sym_[i]; }

  int num_positive() const { return static_cast<int>(pos_.size()); }
  const RootVec& root(int id) const { return pos_[id]; }
  int height(int id) const { return root_height(pos_[id]); }
  const std::vector<RootVec>& positive_roots() const { return pos_; }

  // Id of a positive root, ignoring sign: find_root(beta) works for -beta too.
  std::optional<int> find_positive(const RootVec& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool is_root(const RootVec& v) const {
    if (index_.count(v)) return true;
    RootVec neg(v);
    for (auto& x : neg) x = -x;
    return index_.count(neg) != 0;
  }

  int highest_root() const { return highest_; }

  // Symmetric bilinear form normalized so short roots in each component
  // have square length 2 (long roots then have 4 in types B and C).
  long form(const RootVec& a, const RootVec& b) const {
    long s = 0;
    for (int i = 0; i < rank_; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < rank_; ++j)
        if (b[j] != 0) s += static_cast<long>(a[i]) * b[j] * sym_[i] * cartan_[i][j];
    }
    return s;
  }
  long norm2(const RootVec& a) const { return form(a, a); }

  // Coroot of a root, as a coweight: entry j is 2(beta, alpha_j)/(beta, beta).
  Coweight coroot(const RootVec& beta) const {
    long n2 = norm2(beta);
    Coweight w = Coweight::zero(rank_);
    for (int j = 0; j < rank_; ++j) {
      RootVec aj(rank_, 0);
      aj[j] = 1;
      long num = 2 * form(beta, aj);
      check_consistent(num % n2 == 0, "coroot pairing not integral");
      w.c[j] = static_cast<int>(num / n2);
    }
    return w;
  }
  Coweight coroot(int id) const { return coroot(pos_[id]); }

  static int pairing(const Coweight& lam, const RootVec& beta) {
    long s = 0;
    for (size_t j = 0; j < beta.size(); ++j)
      s += static_cast<long>(lam.c[j]) * beta[j];
    return static_cast<int>(s);
  }
  int pairing(const Coweight& lam, int id) const { return pairing(lam, pos_[id]); }

  // Simple reflection s_i on root coefficients: only coordinate i changes.
  RootVec reflect_root(int i, const RootVec& v) const {
    long p = 0;
    for (int j = 0; j < rank_; ++j) p += static_cast<long>(cartan_[i][j]) * v[j];
    RootVec out(v);
    out[i] -= static_cast<int>(p);
    return out;
  }

  // Simple reflection s_i on a coweight: v - <v, alpha_i> alpha_i^vee.
  Coweight reflect_coweight(int i, const Coweight& v) const {
    Coweight out(v);
    int vi = v.c[i];
    if (vi == 0) return out;
    for (int j = 0; j < rank_; ++j) out.c[j] -= vi * cartan_[i][j];
    return out;
  }

  // General reflection s_beta on a coweight.
  Coweight reflect(const RootVec& beta, const Coweight& v) const {
    int p = pairing(v, beta);
    if (p == 0) return v;
    Coweight out(v);
    Coweight bv = coroot(beta);
    for (int j = 0; j < rank_; ++j) out.c[j] -= p * bv.c[j];
    return out;
  }

  Coweight fundamental_coweight(int i) const {
    Coweight w = Coweight::zero(rank_);
    w.c[i] = 1;
    return w;
  }

  std::string root_string(const RootVec& v) const {
    std::string s = "(";
    for (int i = 0; i < rank_; ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + ")";
  }

 private:
  void check_supported() const {
    auto bad = [&](const std::string& why) {
      throw ConfigError("unsupported root system " +
                        std::string(1, kind_char(kind_)) + std::to_string(rank_) +
                        ": " + why);
    };
    if (rank_ < 1 || rank_ > kMaxRank) bad("rank out of range");
    switch (kind_) {
      case Kind::A: break;
      case Kind::B:
      case Kind::C:
        if (rank_ < 2) bad("rank must be >= 2");
        break;
      case Kind::D:
        if (rank_ < 3) bad("rank must be >= 3");
        break;
      case Kind::E:
        if (rank_ != 6 && rank_ != 7) bad("only E6 and E7 are supported");
        break;
    }
  }

  void make_cartan() {
    int n = rank_;
    cartan_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
    auto edge = [&](int i, int j) { cartan_[i][j] = cartan_[j][i] = -1; };
    switch (kind_) {
      case Kind::A:
        for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
        break;
      case Kind::B:
        // alpha_n short: <alpha_n^vee, alpha_{n-1}> = -2.
        for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
        cartan_[n - 1][n - 2] = -2;
        cartan_[n - 2][n - 1] = -1;
        break;
      case Kind::C:
        // alpha_n long: <alpha_{n-1}^vee, alpha_n> = -2.
        for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
        cartan_[n - 1][n - 2] = -1;
        cartan_[n - 2][n - 1] = -2;
        break;
      case Kind::D:
        for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
        edge(n - 3, n - 1);
        break;
      case Kind::E:
        // Bourbaki numbering: chain 1-3-4-5-6(-7), node 2 hangs off node 4.
        edge(0, 2);
        edge(2, 3);
        edge(3, 4);
        edge(4, 5);
        if (n == 7) edge(5, 6);
        edge(1, 3);
        break;
    }
  }

  void make_symmetrizers() {
    // Minimal positive integers with d_i c_ij = d_j c_ji (connected diagram).
    // Seed with 2 so one halving step across a double edge stays integral.
    int n = rank_;
    sym_.assign(n, 0);
    sym_[0] = 2;
    std::vector<int> todo{0};
    while (!todo.empty()) {
      int i = todo.back();
      todo.pop_back();
      for (int j = 0; j < n; ++j) {
        if (j == i || cartan_[i][j] == 0 || sym_[j] != 0) continue;
        // d_j = d_i * c_ij / c_ji
        int num = sym_[i] * cartan_[i][j];
        check_consistent(num % cartan_[j][i] == 0, "symmetrizer not integral");
        sym_[j] = num / cartan_[j][i];
        todo.push_back(j);
      }
    }
    int g = 0;
    for (int x : sym_) g = std::gcd(g, x);
    for (auto& x : sym_) x /= g;
  }

  void generate_roots() {
    // Closure of the simple roots under all simple reflections.
    std::set<RootVec> all;
    std::vector<RootVec> queue;
    for (int i = 0; i < rank_; ++i) {
      RootVec a(rank_, 0);
      a[i] = 1;
      all.insert(a);
      queue.push_back(a);
    }
    while (!queue.empty()) {
      RootVec v = queue.back();
      queue.pop_back();
      for (int i = 0; i < rank_; ++i) {
        RootVec w = reflect_root(i, v);
        if (all.insert(w).second) queue.push_back(w);
      }
    }
    pos_.clear();
    for (const auto& v : all) {
      bool nonneg = std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
      if (nonneg) pos_.push_back(v);
    }
    std::sort(pos_.begin(), pos_.end(), [](const RootVec& a, const RootVec& b) {
      int ha = root_height(a), hb = root_height(b);
      if (ha != hb) return ha < hb;
      return a < b;
    });
    index_.clear();
    for (size_t i = 0; i < pos_.size(); ++i) index_[pos_[i]] = static_cast<int>(i);
    check_consistent(2 * pos_.size() == all.size(), "root set not symmetric");
  }

  void validate() {
    int n = rank_;
    size_t expect = 0;
    switch (kind_) {
      case Kind::A: expect = static_cast<size_t>(n) * (n + 1) / 2; break;
      case Kind::B:
      case Kind::C: expect = static_cast<size_t>(n) * n; break;
      case Kind::D: expect = static_cast<size_t>(n) * (n - 1); break;
      case Kind::E: expect = (n == 6) ? 36 : 63; break;
    }
    check_consistent(pos_.size() == expect, name() + ": positive root count");

    // Unique coefficientwise-maximal positive root.
    highest_ = -1;
    for (int i = 0; i < num_positive(); ++i) {
      bool top = true;
      for (int j = 0; j < num_positive() && top; ++j) {
        if (i == j) continue;
        for (int k = 0; k < n; ++k)
          if (pos_[j][k] > pos_[i][k]) { top = false; break; }
      }
      if (top) {
        check_consistent(highest_ == -1, "highest root not unique");
        highest_ = i;
      }
    }
    check_consistent(highest_ >= 0, "highest root missing");

    for (const auto& b : pos_)
      check_consistent(pairing(coroot(b), b) == 2, "coroot normalization");
  }

  Kind kind_{Kind::A};
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> sym_;
  std::vector<RootVec> pos_;
  std::map<RootVec, int> index_;
  int highest_ = -1;
};

}  // namespace parorbit
