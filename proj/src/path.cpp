#include "schroeder/path.hpp"

#include <algorithm>

#include "schroeder/errors.hpp"

namespace schroeder {

SchroderPath::SchroderPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  int height = 0;
  int columns = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    switch (steps_[i]) {
      case Step::N: ++height; break;
      case Step::E: --height; ++columns; break;
      case Step::D: ++columns; break;
      default: throw MalformedPath("unknown step", i);
    }
    if (height < 0) throw MalformedPath("path passes below y = x", i);
  }
  if (height != 0) throw MalformedPath("path does not end on y = x", steps_.size());
  size_ = columns;
}

SchroderPath SchroderPath::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'N': steps.push_back(Step::N); break;
      case 'E': steps.push_back(Step::E); break;
      case 'D': steps.push_back(Step::D); break;
      default: throw MalformedPath(std::string("unexpected character '") + text[i] + "'", i);
    }
  }
  return SchroderPath(std::move(steps));
}

std::string SchroderPath::str() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(static_cast<char>(s));
  return out;
}

std::vector<int> SchroderPath::step_heights() const {
  std::vector<int> heights;
  int h = 0;
  for (Step s : steps_) {
    if (s == Step::N) {
      ++h;
      continue;
    }
    heights.push_back(h);
    if (s == Step::E) --h;
  }
  return heights;
}

int SchroderPath::max_height() const {
  int h = 0;
  int top = 0;
  for (Step s : steps_) {
    if (s == Step::N) ++h;
    if (s == Step::E) --h;
    top = std::max(top, h);
  }
  return top;
}

BigInt tau(const SchroderPath& path, int k) {
  if (k <= 0) return 0;
  BigInt total = binom(0, k - 1, BinomMode::Standard);
  for (int h : path.step_heights()) total += binom(h, k - 1, BinomMode::Standard);
  return total;
}

std::vector<BigInt> tau_vector(const SchroderPath& path, int cutoff) {
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(std::max(cutoff, 0)));
  for (int k = 1; k <= cutoff; ++k) out.push_back(tau(path, k));
  return out;
}

SchroderPath first_return_product(const SchroderPath& first, const SchroderPath& rest) {
  std::vector<Step> steps;
  steps.reserve(first.steps().size() + rest.steps().size() + 2);
  steps.push_back(Step::N);
  steps.insert(steps.end(), first.steps().begin(), first.steps().end());
  steps.push_back(Step::E);
  steps.insert(steps.end(), rest.steps().begin(), rest.steps().end());
  return SchroderPath(std::move(steps));
}

SchroderPath diagonal_prepend(const SchroderPath& rest) {
  std::vector<Step> steps;
  steps.reserve(rest.steps().size() + 1);
  steps.push_back(Step::D);
  steps.insert(steps.end(), rest.steps().begin(), rest.steps().end());
  return SchroderPath(std::move(steps));
}

PathDecomposition decompose_path(const SchroderPath& path) {
  const auto& s = path.steps();
  if (s.empty()) throw InvalidInput("decompose_path: empty path");
  if (s.front() == Step::D) return DiagSplit{SchroderPath(std::vector<Step>(s.begin() + 1, s.end()))};
  int h = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == Step::N) ++h;
    if (s[i] == Step::E) --h;
    if (h == 0) {
      return FirstReturn{SchroderPath(std::vector<Step>(s.begin() + 1, s.begin() + i)),
                         SchroderPath(std::vector<Step>(s.begin() + i + 1, s.end()))};
    }
  }
  throw MalformedPath("no return to y = x", s.size());
}

void for_each_path(int n, std::optional<int> max_height,
                   const std::function<void(const SchroderPath&)>& visit, int limit) {
  if (n < 0) throw InvalidInput("enumerate_paths: negative size");
  if (n > limit)
    throw ResourceLimit("enumerate_paths: n = " + std::to_string(n) + " exceeds limit " +
                        std::to_string(limit));
  if (max_height && *max_height < 0) return;
  const int ceiling = max_height.value_or(n);
  std::vector<Step> steps;
  // (x, y) is the current point; remaining moves must reach (n, n).
  std::function<void(int, int)> walk = [&](int x, int y) {
    if (x == n && y == n) {
      visit(SchroderPath(steps));
      return;
    }
    const int h = y - x;
    if (x < n && y < n) {
      steps.push_back(Step::D);
      walk(x + 1, y + 1);
      steps.pop_back();
    }
    if (x < n && h > 0) {
      steps.push_back(Step::E);
      walk(x + 1, y);
      steps.pop_back();
    }
    if (y < n && h < ceiling) {
      steps.push_back(Step::N);
      walk(x, y + 1);
      steps.pop_back();
    }
  };
  walk(0, 0);
}

std::vector<SchroderPath> enumerate_paths(int n, std::optional<int> max_height, int limit) {
  std::vector<SchroderPath> out;
  for_each_path(n, max_height, [&](const SchroderPath& p) { out.push_back(p); }, limit);
  return out;
}

IntPoly gf_between_heights(int from, int to, int ceiling, int order) {
  if (ceiling < 0 || from < 0 || to < 0 || from > ceiling || to > ceiling)
    throw InvalidInput("gf_between_heights: heights must lie in 0..ceiling");
  if (order < 0) throw InvalidInput("gf_between_heights: negative order");
  const auto heights = static_cast<std::size_t>(ceiling) + 1;
  // ways[d][h]: weighted paths of t-degree d from `from` to height h.
  std::vector<std::vector<BigInt>> ways(static_cast<std::size_t>(order) + 1,
                                        std::vector<BigInt>(heights, BigInt(0)));
  ways[0][static_cast<std::size_t>(from)] = 1;
  for (int d = 1; d <= order; ++d) {
    for (std::size_t h = 0; h < heights; ++h) {
      BigInt& w = ways[d][h];
      if (h > 0) w += ways[d - 1][h - 1];            // N
      if (h + 1 < heights) w += ways[d - 1][h + 1];  // E
      if (d >= 2) w += ways[d - 2][h];               // D
    }
  }
  std::vector<BigInt> coeffs(static_cast<std::size_t>(order) + 1);
  for (int d = 0; d <= order; ++d) coeffs[d] = ways[d][static_cast<std::size_t>(to)];
  return IntPoly(std::move(coeffs));
}

}  // namespace schroeder
