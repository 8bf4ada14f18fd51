#pragma once

#include <string>
#include <vector>

#include "schroeder/path.hpp"
#include "schroeder/permutation.hpp"

namespace schroeder {

/// A product of adjacent transpositions s_i (swap positions i and i+1),
/// grouped into blocks. Each block is stored as written, left to right, e.g.
/// {8, 7, 6, 5} for s8 s7 s6 s5; application runs right to left, both within a
/// block and across blocks (the first block acts first).
class TranspositionWord {
 public:
  using Block = std::vector<int>;

  TranspositionWord() = default;
  explicit TranspositionWord(std::vector<Block> blocks) : blocks_(std::move(blocks)) {}

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  /// Total number of transpositions.
  std::size_t length() const noexcept;

  /// Applies block 1 first, then block 2, ... Throws InvalidInput when some s_i
  /// does not fit the permutation.
  Permutation apply(const Permutation& pi) const;

  /// "s8 s7 s6 s5 | s7 | s6 s5"
  std::string str() const;

  friend bool operator==(const TranspositionWord&, const TranspositionWord&) = default;

 private:
  std::vector<Block> blocks_;
};

/// Reads the transposition blocks off the labelled triangles between the path
/// and the diagonal.
TranspositionWord triangle_word(const SchroderPath& path);

/// phi via phi(empty) = 1, phi(D, pi) = (n+1, phi(pi)), phi(pi1 * pi2) = phi(pi1) * phi(pi2).
Permutation phi_recursive(const SchroderPath& path);
/// phi as triangle_word(path) applied to (n+1, n, ..., 1).
Permutation phi_direct(const SchroderPath& path);
/// Unique path with phi(path) = pi. Throws NotInClass outside S(1243, 2143).
SchroderPath phi_inverse(const Permutation& pi);

/// (1, pi + 1) for pi avoiding 132; throws InvalidInput otherwise.
Permutation omega(const Permutation& pi);
/// phi^{-1}(omega(pi)): a Catalan path with the same tau statistics as pi.
SchroderPath krattenthaler_map(const Permutation& pi);

}  // namespace schroeder
