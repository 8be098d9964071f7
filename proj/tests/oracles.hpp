#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "klspecht/composition.hpp"
#include "klspecht/ring.hpp"
#include "klspecht/symgroup.hpp"

namespace oracle {

inline long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline std::vector<std::vector<int>> all_perms(int m) {
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline int inversions(const std::vector<int>& p) {
  int n = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) n += p[i] > p[j];
  return n;
}

/// Hook-length formula.
inline long long hook_count(const std::vector<int>& shape) {
  const int m = std::accumulate(shape.begin(), shape.end(), 0);
  std::vector<int> conj(shape.empty() ? 0 : static_cast<std::size_t>(shape[0]), 0);
  for (int r : shape)
    for (int j = 0; j < r; ++j) ++conj[static_cast<std::size_t>(j)];
  long long num = factorial(m), den = 1;
  for (std::size_t i = 0; i < shape.size(); ++i)
    for (int j = 0; j < shape[i]; ++j) den *= (shape[i] - j - 1) + (conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
  return num / den;
}

/// Partitions obtained by adding (or removing) one box.
inline std::vector<std::vector<int>> add_box(const std::vector<int>& p) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i <= p.size(); ++i) {
    auto q = p;
    if (i == p.size()) q.push_back(1);
    else ++q[i];
    if (i == 0 || q[i] <= q[i - 1]) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}
inline std::vector<std::vector<int>> remove_box(const std::vector<int>& p) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i + 1 < p.size() && p[i + 1] == p[i]) continue;
    auto q = p;
    if (--q[i] == 0) q.pop_back();
    out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Semistandard tableaux (rows weak, columns strict) of the given shape and content.
inline long long semistandard_count(const std::vector<int>& shape, const std::vector<int>& content) {
  std::vector<std::vector<int>> t;
  for (int r : shape) t.emplace_back(static_cast<std::size_t>(r), 0);
  std::vector<int> left = content;
  long long count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t[i].size(); ++j) cells.emplace_back(i, j);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    const auto [i, j] = cells[k];
    for (int s = 1; s <= static_cast<int>(content.size()); ++s) {
      if (!left[static_cast<std::size_t>(s) - 1]) continue;
      if (j > 0 && t[i][j - 1] > s) continue;
      if (i > 0 && t[i - 1][j] >= s) continue;
      --left[static_cast<std::size_t>(s) - 1];
      t[i][j] = s;
      rec(k + 1);
      ++left[static_cast<std::size_t>(s) - 1];
    }
  };
  rec(0);
  return count;
}

/// Irreducible character of S_m by the Murnaghan-Nakayama rule, on a cycle type.
inline long long character(std::vector<int> shape, std::vector<int> cycles) {
  if (cycles.empty()) return shape.empty() ? 1 : 0;
  const int k = cycles.back();
  cycles.pop_back();
  // Beta-numbers: removing a k-rim hook = moving a bead from b to b-k.
  const int r = static_cast<int>(shape.size());
  std::vector<int> beta(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (r - 1 - i);
  long long total = 0;
  for (int i = 0; i < r; ++i) {
    const int b = beta[static_cast<std::size_t>(i)] - k;
    if (b < 0 || std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
    int sign = 0;
    for (int x : beta)
      if (x > b && x < beta[static_cast<std::size_t>(i)]) ++sign;
    auto nb = beta;
    nb[static_cast<std::size_t>(i)] = b;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> ns;
    for (int j = 0; j < r; ++j)
      if (int part = nb[static_cast<std::size_t>(j)] - (r - 1 - j); part > 0) ns.push_back(part);
    total += (sign % 2 ? -1 : 1) * character(ns, cycles);
  }
  return total;
}

inline std::vector<int> cycle_type(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j] - 1)) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline klspecht::LaurentPoly random_poly(std::mt19937_64& rng, int terms = 4) {
  std::uniform_int_distribution<int> exp(-6, 6), coeff(-5, 5);
  std::vector<std::pair<int, klspecht::Integer>> t;
  for (int i = 0; i < terms; ++i) t.emplace_back(exp(rng), coeff(rng));
  return klspecht::LaurentPoly::from_terms(std::move(t));
}

}  // namespace oracle
