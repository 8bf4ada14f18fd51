#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "schroeder/numbers.hpp"

namespace schroeder {

/// A permutation of {1, ..., n} in one-line notation. n = 0 is the empty
/// permutation.
class Permutation {
 public:
  using value_type = int;

  Permutation() = default;
  /// Throws InvalidInput unless `entries` is a permutation of 1..n.
  explicit Permutation(std::vector<int> entries);
  Permutation(std::initializer_list<int> entries);

  /// Parses "2,1,4,3", "2 1 4 3" or the digit shorthand "2143" (n <= 9 only).
  static Permutation parse(std::string_view text);
  /// Increasing permutation 12...n.
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  bool empty() const noexcept { return entries_.empty(); }
  /// 1-based access, matching one-line notation: at(1) is the first entry.
  int at(int position) const { return entries_.at(static_cast<std::size_t>(position - 1)); }
  std::span<const int> entries() const noexcept { return entries_; }

  /// Digit string when n <= 9, comma-separated otherwise.
  std::string str() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

/// A finite set of nonempty patterns, kept sorted and duplicate-free.
class PatternSet {
 public:
  PatternSet() = default;
  PatternSet(std::initializer_list<Permutation> patterns);
  explicit PatternSet(std::vector<Permutation> patterns);

  /// Comma- or space-separated list of patterns in digit shorthand, e.g. "1243,2143".
  static PatternSet parse(std::string_view text);
  /// {1243, 2143}
  static const PatternSet& schroeder();

  void insert(Permutation p);
  PatternSet united(const PatternSet& other) const;

  bool empty() const noexcept { return patterns_.empty(); }
  std::size_t size() const noexcept { return patterns_.size(); }
  auto begin() const { return patterns_.begin(); }
  auto end() const { return patterns_.end(); }
  std::string str() const;

 private:
  std::vector<Permutation> patterns_;
};

/// (tau_1, ..., tau_K) for one permutation.
struct StatVector {
  std::vector<BigInt> values;  // values[k - 1] = tau_k

  BigInt tau(int k) const;
  /// Number of nonempty increasing subsequences: sum over all k.
  BigInt total() const;
  BigInt noninversions() const { return tau(2); }
  int cutoff() const noexcept { return static_cast<int>(values.size()); }
};

/// Rank sequence ("type") of a sequence of distinct integers.
Permutation type_of(std::span<const int> subsequence);

/// Number of index subsequences of `pi` of type `sigma`. sigma must be nonempty.
BigInt count_occurrences(const Permutation& pi, const Permutation& sigma);
bool contains(const Permutation& pi, const Permutation& sigma);
bool is_avoiding(const Permutation& pi, const PatternSet& patterns);
bool in_schroeder_class(const Permutation& pi);

/// Number of increasing subsequences of length k; tau(pi, 0) = 0.
BigInt tau(const Permutation& pi, int k);
/// All tau_k for k = 1..max(n, 1) in one pass, as machine integers (n <= 62).
std::vector<std::uint64_t> tau_all(const Permutation& pi);
StatVector stat_vector(const Permutation& pi, int cutoff);

/// pi1 * pi2: the relabelled pi1, then the maximum, then pi2 without its first entry.
Permutation star(const Permutation& pi1, const Permutation& pi2);
/// (n, pi) for pi of length n - 1.
Permutation prepend_max(const Permutation& pi);

struct Prepend {
  Permutation rest;
  friend bool operator==(const Prepend&, const Prepend&) = default;
};
struct StarSplit {
  Permutation left;
  Permutation right;
  friend bool operator==(const StarSplit&, const StarSplit&) = default;
};
using Decomposition = std::variant<Prepend, StarSplit>;

/// Inverse of prepend_max / star on S(1243, 2143). Throws NotInClass outside it.
Decomposition decompose(const Permutation& pi);

/// Whether enumeration also imposes {1243, 2143}.
enum class Ambient { None, Schroeder };

inline constexpr int kDefaultEnumerationLimit = 12;

/// Visits S_n(R) (or S_n(R u {1243, 2143})) in lexicographic order.
/// Throws ResourceLimit when n > limit.
void for_each_in_class(int n, const PatternSet& patterns, Ambient ambient,
                       const std::function<void(const Permutation&)>& visit,
                       int limit = kDefaultEnumerationLimit);
std::vector<Permutation> enumerate_class(int n, const PatternSet& patterns,
                                         Ambient ambient = Ambient::None,
                                         int limit = kDefaultEnumerationLimit);
std::uint64_t count_class(int n, const PatternSet& patterns, Ambient ambient = Ambient::None,
                          int limit = kDefaultEnumerationLimit);

}  // namespace schroeder
