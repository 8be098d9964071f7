#pragma once

// Diagrams, tableaux, Robinson-Schensted and corner combinatorics.

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <utility>
#include <vector>

#include "klspecht/composition.hpp"
#include "klspecht/symgroup.hpp"

namespace klspecht {

/// (row, column), both 1-based.  The natural pair order is the node order:
/// (i, j) < (i', j') iff i < i', or i = i' and j < j'.
using Node = std::pair<int, int>;

/// A finite set of nodes, kept sorted in node order.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(std::vector<Node> nodes);
  static Diagram young(const Partition& shape);

  const std::vector<Node>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  bool contains(Node k) const;
  int rows() const;
  int columns() const;
  /// Number of nodes in rows 1..rows(); zero entries are kept.
  std::vector<int> row_lengths() const;
  std::vector<int> column_lengths() const;
  /// No empty row or column below the largest index.
  bool is_principal() const;

  std::string to_string() const;
  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<Node> nodes_;
};

/// The unique principal diagram with row composition lambda and column
/// composition mu.  Throws std::invalid_argument unless lambda'' = mu'.
Diagram special_diagram(const Composition& lambda, const Composition& mu);

/// Fillings of a diagram by 1..m along rows and along columns.
std::vector<std::pair<Node, int>> row_filling(const Diagram& d);
std::vector<std::pair<Node, int>> column_filling(const Diagram& d);

/// The permutation w with (row filling) w = (column filling).
Permutation w_of_diagram(const Diagram& d);

/// Rows of entries on a Young diagram.  Used both for standard tableaux and
/// for tableaux with repeated symbols.
class Tableau {
 public:
  Tableau() = default;
  /// Throws std::invalid_argument if row lengths increase.
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  int at(Node k) const { return rows_[k.first - 1][k.second - 1]; }
  /// Node holding the given entry, or (0, 0).
  Node find(int entry) const;
  /// Entries 1..size() each once, rows and columns strictly increasing.
  bool is_standard() const;

  /// Adds value at an addable node.  Throws if k is not an outer corner.
  Tableau with_entry(Node k, int value) const;
  /// Applies the permutation to every entry (entry i becomes i w).
  Tableau relabeled(const Permutation& w) const;
  /// Entry i becomes f(i) for an arbitrary map given as a lookup table indexed by entry.
  Tableau mapped(const std::vector<int>& f) const;

  std::string to_string() const;
  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau&, const Tableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

nlohmann::json to_json(const Tableau& t);

/// Row insertion of a value into a tableau; returns the node created.
Node row_insert(Tableau& t, int value);

struct RSPair {
  Tableau P;  // insertion tableau
  Tableau Q;  // recording tableau
};

/// Row insertion of the one-line form, read left to right.
RSPair rs_insert(const Permutation& w);
/// Inverse of rs_insert.  Throws std::invalid_argument on shape mismatch or non-standard input.
Permutation rs_reverse_insert(const Tableau& P, const Tableau& Q);

struct ReverseBump {
  Tableau remaining;
  int ejected = 0;  // the entry pushed out of the first row
};
/// Removes the entry at inner corner k and reverse-bumps it up to the first row.
ReverseBump reverse_bump(const Tableau& t, Node k);

struct Corners {
  std::vector<Node> inner;  // removable nodes, ascending node order
  std::vector<Node> outer;  // addable nodes, ascending node order
};
Corners corners(const Partition& shape);

/// All standard tableaux of the given shape, sorted.
std::vector<Tableau> standard_tableaux(const Partition& shape);

}  // namespace klspecht
