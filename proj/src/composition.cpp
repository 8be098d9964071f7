#include "klspecht/composition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace klspecht {

namespace {

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  if (text.empty()) return out;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed integer list: '" + std::string(text) + "'");
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<int> conjugate_parts(const std::vector<int>& parts) {
  const int longest = parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end());
  std::vector<int> out(static_cast<std::size_t>(longest), 0);
  for (int p : parts)
    for (int j = 0; j < p; ++j) ++out[j];
  return out;
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("composition parts must be positive");
}

Composition Composition::parse(std::string_view text) { return Composition(parse_ints(text)); }

int Composition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Composition::is_partition() const {
  return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Composition::conjugate() const { return Partition(conjugate_parts(parts_)); }

Partition Composition::sorted() const {
  auto p = parts_;
  std::sort(p.begin(), p.end(), std::greater<>());
  return Partition(std::move(p));
}

std::string Composition::to_string() const { return join(parts_); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>()))
    throw std::invalid_argument("partition parts must be weakly decreasing");
}

Partition Partition::parse(std::string_view text) {
  auto v = parse_ints(text);
  // Trailing zeros are accepted and dropped, so "1,0" reads as (1).
  while (!v.empty() && v.back() == 0) v.pop_back();
  return Partition(std::move(v));
}

int Partition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const { return Partition(conjugate_parts(parts_)); }

std::string Partition::to_string() const { return join(parts_); }

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.total() != b.total()) throw std::invalid_argument("dominance needs partitions of the same total");
  int sa = 0, sb = 0;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa > sb) return false;
  }
  return true;
}

bool dominance_less(const Partition& a, const Partition& b) { return a != b && dominance_leq(a, b); }

bool componentwise_leq(const std::vector<int>& a, const std::vector<int>& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int x = i < a.size() ? a[i] : 0;
    const int y = i < b.size() ? b[i] : 0;
    if (x > y) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> compositions_of(int m) {
  std::vector<Composition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p);
      cur.pop_back();
    }
  };
  if (m > 0) rec(m);
  return out;
}

long long standard_tableaux_count(const Partition& shape) {
  const auto conj = shape.conjugate();
  long long num = 1;
  for (int k = 2; k <= shape.total(); ++k) num *= k;
  long long den = 1;
  for (std::size_t i = 0; i < shape.size(); ++i)
    for (int j = 0; j < shape[i]; ++j) den *= (shape[i] - j - 1) + (conj[j] - static_cast<int>(i) - 1) + 1;
  return num / den;
}

}  // namespace klspecht
