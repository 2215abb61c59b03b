// Orthogonal-coordinate rendering of roots and coweights.  Internal
// arithmetic never uses these; they exist so output matches the familiar
// e_i / half-integer notation for the classical and exceptional types.
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "parorbit/chevalley.hpp"
#include "parorbit/rootsys.hpp"

namespace parorbit {

// Twice the orthogonal coordinates of each simple root, so the E-type
// half-integer entries stay integral.
inline std::vector<std::vector<int>> epsilon_rows_x2(const RootSystem& R) {
  int n = R.rank();
  std::vector<std::vector<int>> rows;
  auto diff = [&](int dim, int i) {
    std::vector<int> v(dim, 0);
    v[i] = 2;
    v[i + 1] = -2;
    return v;
  };
  switch (R.kind()) {
    case Kind::A:
      for (int i = 0; i < n; ++i) rows.push_back(diff(n + 1, i));
      break;
    case Kind::B:
      for (int i = 0; i + 1 < n; ++i) rows.push_back(diff(n, i));
      {
        std::vector<int> last(n, 0);
        last[n - 1] = 2;
        rows.push_back(last);
      }
      break;
    case Kind::C:
      for (int i = 0; i + 1 < n; ++i) rows.push_back(diff(n, i));
      {
        std::vector<int> last(n, 0);
        last[n - 1] = 4;
        rows.push_back(last);
      }
      break;
    case Kind::D:
      for (int i = 0; i + 1 < n; ++i) rows.push_back(diff(n, i));
      {
        std::vector<int> last(n, 0);
        last[n - 2] = 2;
        last[n - 1] = 2;
        rows.push_back(last);
      }
      break;
    case Kind::E: {
      rows.push_back({1, -1, -1, -1, -1, -1, -1, 1});
      rows.push_back({2, 2, 0, 0, 0, 0, 0, 0});
      for (int k = 0; k < n - 2; ++k) {
        std::vector<int> v(8, 0);
        v[k] = -2;
        v[k + 1] = 2;
        rows.push_back(v);
      }
      break;
    }
  }
  return rows;
}

inline std::vector<int> epsilon_x2(const RootSystem& R, const RootVec& v) {
  auto rows = epsilon_rows_x2(R);
  std::vector<int> out(rows[0].size(), 0);
  for (int i = 0; i < R.rank(); ++i)
    if (v[i] != 0)
      for (size_t k = 0; k < out.size(); ++k) out[k] += v[i] * rows[i][k];
  return out;
}

inline std::string format_epsilon_x2(const std::vector<int>& t) {
  bool all_even = true;
  int nonzero = 0, maxabs = 0;
  for (int x : t) {
    if (x % 2 != 0) all_even = false;
    if (x != 0) ++nonzero;
    maxabs = std::max(maxabs, x < 0 ? -x : x);
  }
  if (all_even && nonzero > 0 && nonzero <= 2 && maxabs <= 4) {
    std::string s;
    for (size_t i = 0; i < t.size(); ++i) {
      int c = t[i] / 2;
      if (c == 0) continue;
      if (c > 0 && !s.empty()) s += "+";
      if (c == -1) s += "-";
      else if (c != 1 && c != -1) s += std::to_string(c);
      s += "e" + std::to_string(i + 1);
    }
    return s;
  }
  std::string s = all_even ? "(" : "1/2(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(all_even ? t[i] / 2 : t[i]);
  }
  return s + ")";
}

inline std::string epsilon_string(const RootSystem& R, const RootVec& v) {
  return format_epsilon_x2(epsilon_x2(R, v));
}

// Orthogonal coordinates of a coweight: the unique vector in the span of the
// simple-root directions whose dot products against the simple roots realize
// the stored pairings.  Solved exactly over the rationals.
inline std::string epsilon_string(const RootSystem& R, const Coweight& w) {
  using detail::Frac;
  int n = R.rank();
  auto rows = epsilon_rows_x2(R);
  int dim = static_cast<int>(rows[0].size());

  // Solve G x = rhs with G[k][j] = dot(row_k, row_j) over the doubled rows;
  // the doubled dot is 4x the real one, so rhs[k] = 4 <w, alpha_k>.
  std::vector<std::vector<Frac>> m(n, std::vector<Frac>(n + 1));
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      long dot = 0;
      for (int t = 0; t < dim; ++t) dot += static_cast<long>(rows[k][t]) * rows[j][t];
      m[k][j] = Frac::of(dot);
    }
    m[k][n] = Frac::of(4L * w.c[k]);
  }
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col].n != 0) { p = r; break; }
    check_consistent(p >= 0, "singular Gram matrix");
    std::swap(m[col], m[p]);
    Frac piv = m[col][col];
    for (int c = col; c <= n; ++c) m[col][c] = m[col][c] / piv;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].n == 0) continue;
      Frac f = m[r][col];
      for (int c = col; c <= n; ++c)
        m[r][c] = m[r][c] + Frac{-f.n, f.d} * m[col][c];
    }
  }

  // Doubled coordinate i is sum_j x_j rows[j][i].
  std::vector<Frac> t2(dim, Frac::of(0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < dim; ++i)
      t2[i] = t2[i] + m[j][n] * Frac::of(rows[j][i]);

  bool integral = std::all_of(t2.begin(), t2.end(),
                              [](const Frac& f) { return f.d == 1; });
  if (integral) {
    std::vector<int> t(dim);
    for (int i = 0; i < dim; ++i) t[i] = static_cast<int>(t2[i].n);
    return format_epsilon_x2(t);
  }
  std::string s = "(";
  for (int i = 0; i < dim; ++i) {
    if (i) s += ",";
    Frac real = t2[i] / Frac::of(2);
    s += std::to_string(real.n);
    if (real.d != 1) s += "/" + std::to_string(real.d);
  }
  return s + ")";
}

}  // namespace parorbit
