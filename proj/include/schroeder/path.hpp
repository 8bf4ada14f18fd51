#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "schroeder/numbers.hpp"
#include "schroeder/polynomial.hpp"

namespace schroeder {

/// Enumeration order is D < E < N.
enum class Step : char { D = 'D', E = 'E', N = 'N' };

/// A lattice path from (0,0) to (n,n) with steps N=(0,1), E=(1,0), D=(1,1)
/// that never passes below y = x.
class SchroderPath {
 public:
  SchroderPath() = default;
  /// Throws MalformedPath (with the offending step index) on invalid input.
  explicit SchroderPath(std::vector<Step> steps);

  /// Bare letter string over {N, E, D}; "" is the empty path.
  static SchroderPath parse(std::string_view text);

  /// Endpoint (n, n).
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return steps_.empty(); }
  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::string str() const;

  /// Height y - x at the left endpoint of every E and D step, in path order.
  std::vector<int> step_heights() const;
  /// Largest y - x over all lattice points of the path.
  int max_height() const;

  friend bool operator==(const SchroderPath&, const SchroderPath&) = default;
  friend auto operator<=>(const SchroderPath& a, const SchroderPath& b) {
    return a.steps_ <=> b.steps_;
  }

 private:
  std::vector<Step> steps_;
  int size_ = 0;
};

/// tau_k = C(0, k-1) + sum over E/D steps of C(ht, k-1); tau_0 = 0.
BigInt tau(const SchroderPath& path, int k);
std::vector<BigInt> tau_vector(const SchroderPath& path, int cutoff);

/// N pi1 E pi2
SchroderPath first_return_product(const SchroderPath& first, const SchroderPath& rest);
/// (D, pi)
SchroderPath diagonal_prepend(const SchroderPath& rest);

struct DiagSplit {
  SchroderPath rest;
  friend bool operator==(const DiagSplit&, const DiagSplit&) = default;
};
struct FirstReturn {
  SchroderPath inner;
  SchroderPath rest;
  friend bool operator==(const FirstReturn&, const FirstReturn&) = default;
};
using PathDecomposition = std::variant<DiagSplit, FirstReturn>;

/// Splits off a leading D step or the first return to y = x. Path must be nonempty.
PathDecomposition decompose_path(const SchroderPath& path);

inline constexpr int kDefaultPathLimit = 12;

/// All paths of size n (optionally with every point at height <= max_height),
/// in lexicographic order of their letter strings under D < E < N.
void for_each_path(int n, std::optional<int> max_height,
                   const std::function<void(const SchroderPath&)>& visit,
                   int limit = kDefaultPathLimit);
std::vector<SchroderPath> enumerate_paths(int n, std::optional<int> max_height = std::nullopt,
                                          int limit = kDefaultPathLimit);

/// Generating polynomial, in t = sqrt(x), of the paths that start at height
/// `from`, end at height `to`, and stay within heights 0..ceiling; each N or E
/// step weighs t and each D step t^2. Truncated at t-degree `order`.
IntPoly gf_between_heights(int from, int to, int ceiling, int order);

}  // namespace schroeder
