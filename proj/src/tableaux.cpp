#include "klspecht/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace klspecht {

Diagram::Diagram(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
  for (const auto& [r, c] : nodes_)
    if (r < 1 || c < 1) throw std::invalid_argument("diagram nodes are 1-based");
  std::sort(nodes_.begin(), nodes_.end());
  if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end())
    throw std::invalid_argument("repeated node in diagram");
}

Diagram Diagram::young(const Partition& shape) {
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < shape.size(); ++i)
    for (int j = 1; j <= shape[i]; ++j) nodes.emplace_back(static_cast<int>(i) + 1, j);
  return Diagram(std::move(nodes));
}

bool Diagram::contains(Node k) const { return std::binary_search(nodes_.begin(), nodes_.end(), k); }

int Diagram::rows() const {
  int r = 0;
  for (const auto& n : nodes_) r = std::max(r, n.first);
  return r;
}

int Diagram::columns() const {
  int c = 0;
  for (const auto& n : nodes_) c = std::max(c, n.second);
  return c;
}

std::vector<int> Diagram::row_lengths() const {
  std::vector<int> out(static_cast<std::size_t>(rows()), 0);
  for (const auto& n : nodes_) ++out[n.first - 1];
  return out;
}

std::vector<int> Diagram::column_lengths() const {
  std::vector<int> out(static_cast<std::size_t>(columns()), 0);
  for (const auto& n : nodes_) ++out[n.second - 1];
  return out;
}

bool Diagram::is_principal() const {
  for (int v : row_lengths())
    if (v == 0) return false;
  for (int v : column_lengths())
    if (v == 0) return false;
  return true;
}

std::string Diagram::to_string() const {
  std::string s;
  for (int r = 1; r <= rows(); ++r) {
    for (int c = 1; c <= columns(); ++c) s += contains({r, c}) ? '#' : '.';
    s += '\n';
  }
  return s;
}

Diagram special_diagram(const Composition& lambda, const Composition& mu) {
  if (lambda.total() != mu.total() || lambda.sorted() != mu.conjugate())
    throw std::invalid_argument("lambda''=mu' required (lambda=" + lambda.to_string() +
                                ", mu=" + mu.to_string() + ")");
  // Column c goes to position pos[c] of the Young diagram of lambda'' (stable
  // by decreasing length); node (i, c) is present iff lambda_i >= pos[c].
  std::vector<int> order(mu.size());
  for (std::size_t c = 0; c < mu.size(); ++c) order[c] = static_cast<int>(c);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return mu[a] > mu[b]; });
  std::vector<int> pos(mu.size());
  for (std::size_t p = 0; p < order.size(); ++p) pos[order[p]] = static_cast<int>(p) + 1;
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t c = 0; c < mu.size(); ++c)
      if (lambda[i] >= pos[c]) nodes.emplace_back(static_cast<int>(i) + 1, static_cast<int>(c) + 1);
  return Diagram(std::move(nodes));
}

std::vector<std::pair<Node, int>> row_filling(const Diagram& d) {
  std::vector<std::pair<Node, int>> out;
  int next = 1;
  for (const auto& n : d.nodes()) out.emplace_back(n, next++);
  return out;
}

std::vector<std::pair<Node, int>> column_filling(const Diagram& d) {
  auto nodes = d.nodes();
  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  std::vector<std::pair<Node, int>> out;
  int next = 1;
  for (const auto& n : nodes) out.emplace_back(n, next++);
  std::sort(out.begin(), out.end());
  return out;
}

Permutation w_of_diagram(const Diagram& d) {
  const auto rows = row_filling(d);
  const auto cols = column_filling(d);
  std::vector<int> images(d.size());
  for (std::size_t i = 0; i < rows.size(); ++i) images[rows[i].second - 1] = cols[i].second;
  return Permutation(std::move(images));
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t i = 1; i < rows_.size(); ++i)
    if (rows_[i].size() > rows_[i - 1].size() || rows_[i].empty())
      throw std::invalid_argument("tableau rows must have weakly decreasing lengths");
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

int Tableau::size() const {
  int n = 0;
  for (const auto& r : rows_) n += static_cast<int>(r.size());
  return n;
}

Node Tableau::find(int entry) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j)
      if (rows_[i][j] == entry) return {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
  return {0, 0};
}

bool Tableau::is_standard() const {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      const int v = rows_[i][j];
      if (v < 1 || v > n || seen[v]) return false;
      seen[v] = true;
      if (j > 0 && rows_[i][j - 1] >= v) return false;
      if (i > 0 && rows_[i - 1][j] >= v) return false;
    }
  return true;
}

Tableau Tableau::with_entry(Node k, int value) const {
  auto rows = rows_;
  const auto [r, c] = k;
  if (r < 1 || r > static_cast<int>(rows.size()) + 1) throw std::invalid_argument("node is not addable");
  if (r == static_cast<int>(rows.size()) + 1) rows.emplace_back();
  auto& row = rows[r - 1];
  if (c != static_cast<int>(row.size()) + 1 || (r > 1 && static_cast<int>(rows[r - 2].size()) < c))
    throw std::invalid_argument("node is not addable");
  row.push_back(value);
  return Tableau(std::move(rows));
}

Tableau Tableau::relabeled(const Permutation& w) const {
  auto rows = rows_;
  for (auto& r : rows)
    for (auto& v : r) v = w(v);
  return Tableau(std::move(rows));
}

Tableau Tableau::mapped(const std::vector<int>& f) const {
  auto rows = rows_;
  for (auto& r : rows)
    for (auto& v : r) v = f.at(static_cast<std::size_t>(v));
  return Tableau(std::move(rows));
}

std::string Tableau::to_string() const {
  int width = 1;
  for (const auto& r : rows_)
    for (int v : r) width = std::max(width, static_cast<int>(std::to_string(v).size()));
  std::string s;
  for (const auto& r : rows_) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      auto cell = std::to_string(r[j]);
      if (j + 1 < r.size()) cell.resize(static_cast<std::size_t>(width) + 1, ' ');
      s += cell;
    }
    s += '\n';
  }
  return s;
}

nlohmann::json to_json(const Tableau& t) { return t.rows(); }

Node row_insert(Tableau& t, int value) {
  auto rows = t.rows();
  int x = value;
  for (std::size_t i = 0;; ++i) {
    if (i == rows.size()) rows.emplace_back();
    auto& row = rows[i];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      const Node k{static_cast<int>(i) + 1, static_cast<int>(row.size())};
      t = Tableau(std::move(rows));
      return k;
    }
    std::swap(x, *it);
  }
}

RSPair rs_insert(const Permutation& w) {
  Tableau P, Q;
  for (int i = 1; i <= w.rank(); ++i) {
    const Node k = row_insert(P, w(i));
    Q = Q.with_entry(k, i);
  }
  return {std::move(P), std::move(Q)};
}

ReverseBump reverse_bump(const Tableau& t, Node k) {
  auto rows = t.rows();
  const auto [r, c] = k;
  if (r < 1 || r > static_cast<int>(rows.size()) || c != static_cast<int>(rows[r - 1].size()) ||
      (r < static_cast<int>(rows.size()) && static_cast<int>(rows[r].size()) >= c))
    throw std::invalid_argument("node is not an inner corner");
  int x = rows[r - 1].back();
  rows[r - 1].pop_back();
  if (rows[r - 1].empty()) rows.pop_back();
  for (int i = r - 2; i >= 0; --i) {
    auto& row = rows[i];
    // Largest entry smaller than x.
    auto it = std::lower_bound(row.begin(), row.end(), x);
    if (it == row.begin()) throw std::invalid_argument("tableau rows are not increasing");
    --it;
    std::swap(x, *it);
  }
  return {Tableau(std::move(rows)), x};
}

Permutation rs_reverse_insert(const Tableau& P, const Tableau& Q) {
  if (P.shape() != Q.shape()) throw std::invalid_argument("P and Q must have the same shape");
  if (!P.is_standard() || !Q.is_standard()) throw std::invalid_argument("P and Q must be standard");
  const int m = P.size();
  std::vector<int> images(static_cast<std::size_t>(m));
  Tableau cur = P;
  for (int i = m; i >= 1; --i) {
    auto bump = reverse_bump(cur, Q.find(i));
    images[i - 1] = bump.ejected;
    cur = std::move(bump.remaining);
  }
  return Permutation(std::move(images));
}

Corners corners(const Partition& shape) {
  Corners out;
  const int r = static_cast<int>(shape.size());
  for (int i = 1; i <= r; ++i)
    if (i == r || shape[i - 1] > shape[i]) out.inner.emplace_back(i, shape[i - 1]);
  out.outer.emplace_back(1, shape.part(0) + 1);
  for (int i = 2; i <= r; ++i)
    if (shape[i - 2] > shape[i - 1]) out.outer.emplace_back(i, shape[i - 1] + 1);
  out.outer.emplace_back(r + 1, 1);
  std::sort(out.outer.begin(), out.outer.end());
  out.outer.erase(std::unique(out.outer.begin(), out.outer.end()), out.outer.end());
  return out;
}

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  // Place m, m-1, ..., 1 at successive inner corners.
  std::vector<Tableau> out;
  std::function<void(std::vector<std::vector<int>>&, std::vector<int>&, int)> rec =
      [&](std::vector<std::vector<int>>& rows, std::vector<int>& left, int next) {
        if (next == 0) {
          out.emplace_back(rows);
          return;
        }
        for (std::size_t i = 0; i < left.size(); ++i) {
          if (left[i] == 0) continue;
          if (i + 1 < left.size() && left[i + 1] == left[i]) continue;
          rows[i][left[i] - 1] = next;
          --left[i];
          rec(rows, left, next - 1);
          ++left[i];
        }
      };
  std::vector<std::vector<int>> rows;
  for (int p : shape.parts()) rows.emplace_back(static_cast<std::size_t>(p), 0);
  std::vector<int> left = shape.parts();
  rec(rows, left, shape.total());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace klspecht
