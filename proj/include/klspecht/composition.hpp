#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace klspecht {

class Partition;

/// A composition of m: a finite sequence of positive parts.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  /// Parses "2,1,3"; whitespace tolerated.  Throws std::invalid_argument.
  static Composition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int total() const;
  bool is_partition() const;

  /// lambda': number of parts >= j, for j = 1, 2, ...
  Partition conjugate() const;
  /// lambda'': the parts sorted into decreasing order.
  Partition sorted() const;

  std::string to_string() const;
  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// Weakly decreasing positive parts; the empty partition of 0 is allowed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  /// Part i (0-based) with implicit trailing zeros.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int total() const;
  Partition conjugate() const;
  Composition as_composition() const { return Composition(parts_); }

  std::string to_string() const;
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Dominance order; throws std::invalid_argument on unequal totals.
bool dominance_leq(const Partition& a, const Partition& b);
/// Strict dominance.
bool dominance_less(const Partition& a, const Partition& b);

/// a_i <= b_i for every i, trailing zeros implied.
bool componentwise_leq(const std::vector<int>& a, const std::vector<int>& b);

std::vector<Partition> partitions_of(int m);
/// Every composition of m, in lexicographic order of parts.
std::vector<Composition> compositions_of(int m);

/// Number of standard tableaux of the given shape (hook length formula).
long long standard_tableaux_count(const Partition& shape);

}  // namespace klspecht
