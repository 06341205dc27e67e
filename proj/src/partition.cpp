#include "macrui/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace macrui {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw Error(ErrorKind::kInvalidArgument,
                  "parts must be positive and weakly decreasing");
    }
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int row : parts_)
    for (int j = 0; j < row; ++j) ++c[j];
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

bool Partition::interlaces(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= length(); ++i) {
    if (mu.part(i) > part(i) || mu.part(i) < part(i + 1)) return false;
  }
  return true;
}

long Partition::n_statistic() const {
  long s = 0;
  for (int i = 1; i <= length(); ++i) s += static_cast<long>(i - 1) * part(i);
  return s;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight()) {
    throw Error(ErrorKind::kInvalidArgument, "dominance order needs equal weights");
  }
  int sm = 0;
  int sl = 0;
  for (int i = 1; i <= std::max(mu.length(), lambda.length()); ++i) {
    sm += mu.part(i);
    sl += lambda.part(i);
    if (sm > sl) return false;
  }
  return true;
}

BoxStats arm_leg(const Partition& lambda, int row, int col) {
  if (!lambda.has_box(row, col)) {
    throw Error(ErrorKind::kInvalidArgument, "box (" + std::to_string(row) + "," +
                                                 std::to_string(col) + ") is outside " +
                                                 lambda.to_string());
  }
  int column_height = 0;
  while (lambda.part(column_height + 1) >= col) ++column_height;
  return {lambda.part(row) - col, column_height - row, col - 1, row - 1};
}

QTPolynomial hook_polynomial(const Partition& lambda) {
  const auto nq = static_cast<std::uint32_t>(lambda.n_statistic());
  const auto nt = static_cast<std::uint32_t>(lambda.conjugate().n_statistic());
  QTPolynomial h = QTPolynomial::monomial(nq, nt);
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(i); ++j) {
      const BoxStats s = arm_leg(lambda, i, j);
      h *= QTPolynomial::monomial(static_cast<std::uint32_t>(s.arm + 1), 0) -
           QTPolynomial::monomial(0, static_cast<std::uint32_t>(s.leg));
    }
  }
  return h;
}

QTScalar hook_H(const Partition& lambda) { return QTScalar(hook_polynomial(lambda)); }

bool in_fat_hook(const Partition& lambda, int n, int m) { return lambda.part(n + 1) <= m; }

bool PartitionFilter::accepts(const Partition& lambda) const {
  switch (kind_) {
    case Kind::kAll: return true;
    case Kind::kMaxLength: return lambda.length() <= a_;
    case Kind::kFatHook: return in_fat_hook(lambda, a_, b_);
  }
  return false;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& current,
              const PartitionFilter& filter, std::vector<Partition>& out) {
  if (remaining == 0) {
    Partition p(current);
    if (filter.accepts(p)) out.push_back(std::move(p));
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    current.push_back(k);
    generate(remaining - k, k, current, filter, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d, PartitionFilter filter) {
  std::vector<Partition> out;
  if (d < 0) return out;
  std::vector<int> current;
  generate(d, d, current, filter, out);
  return out;
}

std::vector<Partition> partitions_up_to(int d, PartitionFilter filter) {
  std::vector<Partition> out;
  for (int k = 0; k <= d; ++k) {
    auto level = enumerate_partitions(k, filter);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Partition> horizontal_strips_below(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> mu(static_cast<std::size_t>(lambda.length()), 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i > lambda.length()) {
      out.emplace_back(mu);
      return;
    }
    for (int v = lambda.part(i); v >= lambda.part(i + 1); --v) {
      mu[i - 1] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> mu(static_cast<std::size_t>(lambda.length()), 0);
  auto rec = [&](auto&& self, int i, int cap) -> void {
    if (i > lambda.length()) {
      out.emplace_back(mu);
      return;
    }
    for (int v = std::min(lambda.part(i), cap); v >= 0; --v) {
      mu[i - 1] = v;
      self(self, i + 1, v);
    }
    mu[i - 1] = 0;
  };
  rec(rec, 1, lambda.part(1));
  return out;
}

}  // namespace macrui
