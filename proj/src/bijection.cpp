#include "schroeder/bijection.hpp"

#include <set>
#include <type_traits>
#include <sstream>
#include <utility>

#include "schroeder/errors.hpp"

namespace schroeder {

std::size_t TranspositionWord::length() const noexcept {
  std::size_t total = 0;
  for (const auto& b : blocks_) total += b.size();
  return total;
}

Permutation TranspositionWord::apply(const Permutation& pi) const {
  std::vector<int> e(pi.entries().begin(), pi.entries().end());
  const int n = pi.size();
  for (const auto& block : blocks_) {
    for (auto it = block.rbegin(); it != block.rend(); ++it) {
      const int i = *it;
      if (i < 1 || i >= n)
        throw InvalidInput("s" + std::to_string(i) + " does not act on length " + std::to_string(n));
      std::swap(e[static_cast<std::size_t>(i - 1)], e[static_cast<std::size_t>(i)]);
    }
  }
  return Permutation(std::move(e));
}

std::string TranspositionWord::str() const {
  std::ostringstream out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b > 0) out << " | ";
    for (std::size_t j = 0; j < blocks_[b].size(); ++j) out << (j ? " s" : "s") << blocks_[b][j];
  }
  return out.str();
}

namespace {

// Triangle layout below a path. Column c (1-based) is the unit strip
// c-1 <= x <= c; it holds upper triangles at levels 0..height[c]-1, where the
// triangle at level d has its upper-right corner at (c, c + d).
struct TriangleDiagram {
  int size = 0;
  std::vector<int> height;             // index 1..size
  std::set<std::pair<int, int>> stops;  // (x, y - x) of points entered by E and left by N

  bool has(int column, int level) const {
    return column >= 1 && column <= size && level < height[static_cast<std::size_t>(column)];
  }
  // A diagonal run at `level` may continue from `column` down-left into column - 1.
  bool continues(int column, int level) const {
    return has(column - 1, level) && !stops.count({column - 1, level});
  }
};

TriangleDiagram diagram_of(const SchroderPath& path) {
  TriangleDiagram t;
  t.size = path.size();
  t.height.assign(static_cast<std::size_t>(t.size) + 1, 0);
  int x = 0;
  int y = 0;
  Step prev = Step::D;
  bool have_prev = false;
  for (Step s : path.steps()) {
    if (s == Step::N && have_prev && prev == Step::E) t.stops.insert({x, y - x});
    switch (s) {
      case Step::N: ++y; break;
      case Step::E:
        t.height[static_cast<std::size_t>(x) + 1] = y - x;
        ++x;
        break;
      case Step::D:
        t.height[static_cast<std::size_t>(x) + 1] = y - x;
        ++x;
        ++y;
        break;
    }
    prev = s;
    have_prev = true;
  }
  return t;
}

// Reads the runs at `level` lying in columns lo..hi from right to left. Each
// run is a block; the runs stacked directly on top of it are read before
// moving further left.
void read_runs(const TriangleDiagram& t, int level, int lo, int hi,
               std::vector<TranspositionWord::Block>& out) {
  int c = hi;
  while (c >= lo) {
    if (!t.has(c, level)) {
      --c;
      continue;
    }
    TranspositionWord::Block block;
    const int right = c;
    block.push_back(c);
    while (c - 1 >= lo && t.continues(c, level)) {
      --c;
      block.push_back(c);
    }
    const int left = c;
    out.push_back(std::move(block));
    read_runs(t, level + 1, left, right, out);
    --c;
  }
}

}  // namespace

TranspositionWord triangle_word(const SchroderPath& path) {
  const auto t = diagram_of(path);
  std::vector<TranspositionWord::Block> blocks;
  read_runs(t, 0, 1, t.size, blocks);
  return TranspositionWord(std::move(blocks));
}

Permutation phi_recursive(const SchroderPath& path) {
  if (path.empty()) return Permutation{1};
  return std::visit(
      [](const auto& split) -> Permutation {
        using T = std::decay_t<decltype(split)>;
        if constexpr (std::is_same_v<T, DiagSplit>)
          return prepend_max(phi_recursive(split.rest));
        else
          return star(phi_recursive(split.inner), phi_recursive(split.rest));
      },
      decompose_path(path));
}

Permutation phi_direct(const SchroderPath& path) {
  std::vector<int> start(static_cast<std::size_t>(path.size()) + 1);
  for (std::size_t i = 0; i < start.size(); ++i) start[i] = static_cast<int>(start.size() - i);
  return triangle_word(path).apply(Permutation(std::move(start)));
}

namespace {

SchroderPath inverse_in_class(const Permutation& pi) {
  if (pi.size() == 1) return {};
  return std::visit(
      [](const auto& split) -> SchroderPath {
        using T = std::decay_t<decltype(split)>;
        if constexpr (std::is_same_v<T, Prepend>)
          return diagonal_prepend(inverse_in_class(split.rest));
        else
          return first_return_product(inverse_in_class(split.left), inverse_in_class(split.right));
      },
      decompose(pi));
}

}  // namespace

SchroderPath phi_inverse(const Permutation& pi) {
  if (pi.empty()) throw NotInClass("phi_inverse: the empty permutation has no preimage");
  if (!in_schroeder_class(pi))
    throw NotInClass("phi_inverse: " + pi.str() + " is not in S(1243, 2143)");
  return inverse_in_class(pi);
}

Permutation omega(const Permutation& pi) {
  if (contains(pi, Permutation{1, 3, 2}))
    throw InvalidInput("omega: " + pi.str() + " contains 132");
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(pi.size()) + 1);
  e.push_back(1);
  for (int v : pi.entries()) e.push_back(v + 1);
  return Permutation(std::move(e));
}

SchroderPath krattenthaler_map(const Permutation& pi) { return phi_inverse(omega(pi)); }

}  // namespace schroeder
