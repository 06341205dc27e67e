#pragma once

// Young diagrams. Boxes are addressed (row, column), both 1-based.

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "macrui/scalar.hpp"

namespace macrui {

class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; throws kInvalidArgument unless the parts are
  /// nonnegative and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }
  /// lambda_i for 1-based i, zero past the end.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

  Partition conjugate() const;
  /// True when the diagram of mu is a subset of this diagram.
  bool contains(const Partition& mu) const;
  /// True when this / mu is a horizontal strip: lambda_{i+1} <= mu_i <= lambda_i.
  bool interlaces(const Partition& mu) const;
  bool has_box(int row, int col) const { return row >= 1 && col >= 1 && col <= part(row); }
  /// n(lambda) = sum (i-1) lambda_i.
  long n_statistic() const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Dominance order mu <= lambda. Throws kInvalidArgument on unequal weights.
bool dominance_leq(const Partition& mu, const Partition& lambda);

struct BoxStats {
  int arm = 0;     // lambda_i - j
  int leg = 0;     // lambda'_j - i
  int coarm = 0;   // j - 1
  int coleg = 0;   // i - 1

  friend bool operator==(const BoxStats&, const BoxStats&) = default;
};

BoxStats arm_leg(const Partition& lambda, int row, int col);

/// H(lambda,q,t) = t^{n(lambda')} q^{n(lambda)} prod_s (q^{a(s)+1} - t^{l(s)}).
QTPolynomial hook_polynomial(const Partition& lambda);
QTScalar hook_H(const Partition& lambda);

/// lambda_{n+1} <= m.
bool in_fat_hook(const Partition& lambda, int n, int m);

class PartitionFilter {
 public:
  static PartitionFilter all() { return PartitionFilter(Kind::kAll, 0, 0); }
  static PartitionFilter max_length(int N) { return PartitionFilter(Kind::kMaxLength, N, 0); }
  static PartitionFilter fat_hook(int n, int m) { return PartitionFilter(Kind::kFatHook, n, m); }

  bool accepts(const Partition& lambda) const;

 private:
  enum class Kind { kAll, kMaxLength, kFatHook };
  PartitionFilter(Kind kind, int a, int b) : kind_(kind), a_(a), b_(b) {}
  Kind kind_;
  int a_;
  int b_;
};

/// All partitions of d accepted by the filter, in reverse lexicographic order.
std::vector<Partition> enumerate_partitions(int d, PartitionFilter filter = PartitionFilter::all());

/// All partitions with weight <= d, by increasing weight.
std::vector<Partition> partitions_up_to(int d, PartitionFilter filter = PartitionFilter::all());

/// All mu with lambda / mu a horizontal strip (including mu = lambda).
std::vector<Partition> horizontal_strips_below(const Partition& lambda);

/// All mu contained in lambda.
std::vector<Partition> subpartitions(const Partition& lambda);

}  // namespace macrui

template <>
struct std::hash<macrui::Partition> {
  std::size_t operator()(const macrui::Partition& p) const {
    std::size_t h = 0;
    for (int x : p.parts()) h = h * 131 + static_cast<std::size_t>(x);
    return h;
  }
};
