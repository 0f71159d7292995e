#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace schubop {

/// Weakly decreasing sequence of positive parts. Zero parts are dropped on construction.
class Partition {
 public:
  Partition() = default;
  /// Throws RangeError unless the nonzero parts are weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);

  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;  // |I|
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  const std::vector<int>& parts() const noexcept { return parts_; }

  bool is_strict() const noexcept;
  bool contains_part(int p) const noexcept;
  /// 1-based position of part p, 0 if absent.
  int position_of(int p) const noexcept;
  /// Componentwise containment of diagrams.
  bool contained_in(const Partition& other) const noexcept;

  /// "(3,2,1)"; the empty partition prints "()".
  std::string to_string() const;
  /// Accepts "(3,2,1)", "[3,2,1]" or "3,2,1"; zero parts allowed and dropped.
  static Partition parse(std::string_view text);

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Partition with pairwise distinct parts.
class StrictPartition : public Partition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);
  explicit StrictPartition(const Partition& p);

  /// Removes the given parts; each must occur.
  StrictPartition without(const std::vector<int>& erased) const;
};

/// rho(k) = (k, k-1, ..., 1).
StrictPartition staircase(int k);
/// The strict partition whose parts complement those of I in {k, ..., 1}.
StrictPartition complement_in_staircase(const StrictPartition& I, int k);
/// All strict I contained in rho(k), ordered by size then lexicographically.
std::vector<StrictPartition> strict_partitions_in_staircase(int k);
/// Partitions of m with at most `parts` parts, each at most `max_part`.
std::vector<Partition> partitions_in_box(int m, int parts, int max_part);

/// Binomial coefficient as a machine integer (0 outside the usual range).
long long binomial(int n, int k);
/// (-1)^e for any integer e.
inline int sign_power(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace schubop
