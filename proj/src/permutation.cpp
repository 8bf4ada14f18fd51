#include "schroeder/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "schroeder/errors.hpp"

namespace schroeder {

namespace {

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

int parse_int(const std::string& token) {
  if (token.empty() || !std::all_of(token.begin(), token.end(),
                                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw InvalidInput("not a positive integer: '" + token + "'");
  if (token.size() > 6) throw InvalidInput("entry too large: '" + token + "'");
  return std::stoi(token);
}

// For each position j of a pattern, the positions (within the prefix sigma[0..j-1])
// holding the nearest smaller and nearest larger value, or -1.
struct PatternPlan {
  std::vector<int> lower;
  std::vector<int> upper;
};

PatternPlan make_plan(std::span<const int> sigma) {
  PatternPlan plan;
  const auto k = sigma.size();
  plan.lower.assign(k, -1);
  plan.upper.assign(k, -1);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (sigma[i] < sigma[j] && (plan.lower[j] < 0 || sigma[i] > sigma[plan.lower[j]]))
        plan.lower[j] = static_cast<int>(i);
      if (sigma[i] > sigma[j] && (plan.upper[j] < 0 || sigma[i] < sigma[plan.upper[j]]))
        plan.upper[j] = static_cast<int>(i);
    }
  }
  return plan;
}

// Counts embeddings of the pattern into `seq`. With `anchor_last`, the final
// pattern letter is pinned to the final entry of seq. With `first_only`, stops
// at the first embedding found.
class Matcher {
 public:
  Matcher(std::span<const int> seq, const PatternPlan& plan, bool anchor_last, bool first_only)
      : seq_(seq), plan_(plan), chosen_(plan.lower.size()), anchor_last_(anchor_last),
        first_only_(first_only) {}

  std::uint64_t run() {
    count_ = 0;
    if (plan_.lower.size() > seq_.size() || plan_.lower.empty()) return 0;
    extend(0, 0);
    return count_;
  }

 private:
  bool fits(std::size_t j, int value) const {
    const int lo = plan_.lower[j];
    const int hi = plan_.upper[j];
    return (lo < 0 || chosen_[lo] < value) && (hi < 0 || chosen_[hi] > value);
  }

  void extend(std::size_t j, std::size_t from) {
    const std::size_t k = chosen_.size();
    if (j == k) {
      ++count_;
      return;
    }
    const std::size_t n = seq_.size();
    if (anchor_last_ && j + 1 == k) {
      if (from <= n - 1 && fits(j, seq_[n - 1])) ++count_;
      return;
    }
    // Leave room for the letters still to be placed.
    const std::size_t stop = n - k + j + 1;
    for (std::size_t p = from; p < stop; ++p) {
      if (!fits(j, seq_[p])) continue;
      chosen_[j] = seq_[p];
      extend(j + 1, p + 1);
      if (first_only_ && count_ > 0) return;
    }
  }

  std::span<const int> seq_;
  const PatternPlan& plan_;
  std::vector<int> chosen_;
  bool anchor_last_;
  bool first_only_;
  std::uint64_t count_ = 0;
};

template <typename Count>
std::vector<Count> increasing_counts(std::span<const int> pi) {
  // prev[i]: increasing subsequences of length j + 1 ending at position i.
  const std::size_t n = pi.size();
  std::vector<Count> totals(std::max<std::size_t>(n, 1), Count(0));
  std::vector<Count> prev(n, Count(1));
  std::vector<Count> next(n);
  for (std::size_t j = 0; j < n; ++j) {
    Count sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += prev[i];
    totals[j] = sum;
    if (sum == 0) break;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = 0;
      for (std::size_t p = 0; p < i; ++p)
        if (pi[p] < pi[i]) next[i] += prev[p];
    }
    std::swap(prev, next);
  }
  if (n == 0) totals[0] = 0;
  return totals;
}

}  // namespace

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const auto n = entries_.size();
  std::vector<bool> seen(n + 1, false);
  for (int v : entries_) {
    if (v < 1 || static_cast<std::size_t>(v) > n)
      throw InvalidInput("entry " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    if (seen[v]) throw InvalidInput("duplicate entry " + std::to_string(v));
    seen[v] = true;
  }
}

Permutation::Permutation(std::initializer_list<int> entries)
    : Permutation(std::vector<int>(entries)) {}

Permutation Permutation::parse(std::string_view text) {
  auto tokens = split_tokens(text);
  std::vector<int> entries;
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    // Digit shorthand.
    for (char c : tokens[0]) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw InvalidInput("not a permutation: '" + std::string(text) + "'");
      entries.push_back(c - '0');
    }
    if (entries.size() > 9)
      throw InvalidInput("digit shorthand only allowed for n <= 9: '" + std::string(text) + "'");
  } else {
    for (const auto& t : tokens) entries.push_back(parse_int(t));
  }
  return Permutation(std::move(entries));
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

std::string Permutation::str() const {
  std::ostringstream out;
  const bool compact = size() <= 9;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!compact && i > 0) out << ',';
    out << entries_[i];
  }
  return out.str();
}

// ---------------------------------------------------------------------------

PatternSet::PatternSet(std::initializer_list<Permutation> patterns)
    : PatternSet(std::vector<Permutation>(patterns)) {}

PatternSet::PatternSet(std::vector<Permutation> patterns) {
  for (auto& p : patterns) insert(std::move(p));
}

PatternSet PatternSet::parse(std::string_view text) {
  PatternSet set;
  for (const auto& token : split_tokens(text)) set.insert(Permutation::parse(token));
  return set;
}

const PatternSet& PatternSet::schroeder() {
  static const PatternSet set{Permutation{1, 2, 4, 3}, Permutation{2, 1, 4, 3}};
  return set;
}

void PatternSet::insert(Permutation p) {
  if (p.empty()) throw InvalidInput("patterns must be nonempty");
  auto it = std::lower_bound(patterns_.begin(), patterns_.end(), p);
  if (it == patterns_.end() || *it != p) patterns_.insert(it, std::move(p));
}

PatternSet PatternSet::united(const PatternSet& other) const {
  PatternSet out = *this;
  for (const auto& p : other) out.insert(p);
  return out;
}

std::string PatternSet::str() const {
  std::string out;
  for (const auto& p : patterns_) {
    if (!out.empty()) out += ',';
    out += p.str();
  }
  return out;
}

BigInt StatVector::tau(int k) const {
  if (k < 1 || k > cutoff()) return 0;
  return values[static_cast<std::size_t>(k - 1)];
}

BigInt StatVector::total() const {
  BigInt sum = 0;
  for (const auto& v : values) sum += v;
  return sum;
}

// ---------------------------------------------------------------------------

Permutation type_of(std::span<const int> subsequence) {
  std::vector<int> order(subsequence.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return subsequence[a] < subsequence[b]; });
  std::vector<int> ranks(subsequence.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && subsequence[order[r]] == subsequence[order[r - 1]])
      throw InvalidInput("type_of: duplicate entry " + std::to_string(subsequence[order[r]]));
    ranks[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(ranks));
}

BigInt count_occurrences(const Permutation& pi, const Permutation& sigma) {
  if (sigma.empty()) throw InvalidInput("count_occurrences: empty pattern");
  const auto plan = make_plan(sigma.entries());
  Matcher m(pi.entries(), plan, false, false);
  const std::uint64_t c = m.run();
  return BigInt(static_cast<unsigned long>(c));
}

bool contains(const Permutation& pi, const Permutation& sigma) {
  if (sigma.empty()) throw InvalidInput("contains: empty pattern");
  const auto plan = make_plan(sigma.entries());
  return Matcher(pi.entries(), plan, false, true).run() > 0;
}

bool is_avoiding(const Permutation& pi, const PatternSet& patterns) {
  for (const auto& sigma : patterns)
    if (contains(pi, sigma)) return false;
  return true;
}

bool in_schroeder_class(const Permutation& pi) {
  return is_avoiding(pi, PatternSet::schroeder());
}

std::vector<std::uint64_t> tau_all(const Permutation& pi) {
  if (pi.size() > 62) throw ResourceLimit("tau_all: permutation too long for machine counts");
  return increasing_counts<std::uint64_t>(pi.entries());
}

BigInt tau(const Permutation& pi, int k) {
  if (k <= 0 || k > pi.size()) return 0;
  if (pi.size() <= 62) {
    const auto all = increasing_counts<std::uint64_t>(pi.entries());
    return BigInt(static_cast<unsigned long>(all[static_cast<std::size_t>(k - 1)]));
  }
  const auto all = increasing_counts<BigInt>(pi.entries());
  return all[static_cast<std::size_t>(k - 1)];
}

StatVector stat_vector(const Permutation& pi, int cutoff) {
  if (cutoff < 1) throw InvalidInput("stat_vector: cutoff must be positive");
  StatVector out;
  out.values.assign(static_cast<std::size_t>(cutoff), BigInt(0));
  if (pi.empty()) return out;
  if (pi.size() <= 62) {
    const auto all = increasing_counts<std::uint64_t>(pi.entries());
    for (int k = 1; k <= cutoff && k <= pi.size(); ++k)
      out.values[k - 1] = BigInt(static_cast<unsigned long>(all[k - 1]));
  } else {
    const auto all = increasing_counts<BigInt>(pi.entries());
    for (int k = 1; k <= cutoff && k <= pi.size(); ++k) out.values[k - 1] = all[k - 1];
  }
  return out;
}

// ---------------------------------------------------------------------------

Permutation star(const Permutation& pi1, const Permutation& pi2) {
  if (pi1.empty() || pi2.empty()) throw InvalidInput("star: operands must be nonempty");
  const int m = pi2.size();
  const int n = pi1.size() + m;
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int v : pi1.entries()) out.push_back(v == 1 ? pi2.at(1) : v + m - 1);
  out.push_back(n);
  for (int i = 2; i <= m; ++i) out.push_back(pi2.at(i));
  return Permutation(std::move(out));
}

Permutation prepend_max(const Permutation& pi) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(pi.size()) + 1);
  out.push_back(pi.size() + 1);
  out.insert(out.end(), pi.entries().begin(), pi.entries().end());
  return Permutation(std::move(out));
}

Decomposition decompose(const Permutation& pi) {
  if (pi.empty()) throw InvalidInput("decompose: empty permutation");
  if (!in_schroeder_class(pi))
    throw NotInClass("decompose: " + pi.str() + " is not in S(1243, 2143)");
  const auto e = pi.entries();
  const int n = pi.size();
  if (e[0] == n) return Prepend{Permutation(std::vector<int>(e.begin() + 1, e.end()))};

  const auto top = static_cast<std::size_t>(std::find(e.begin(), e.end(), n) - e.begin());
  const int i = static_cast<int>(top);
  Permutation left = type_of(e.subspan(0, top));
  std::vector<int> right;
  for (int v : e)
    if (v <= n - i) right.push_back(v);
  return StarSplit{std::move(left), Permutation(std::move(right))};
}

// ---------------------------------------------------------------------------

void for_each_in_class(int n, const PatternSet& patterns, Ambient ambient,
                       const std::function<void(const Permutation&)>& visit, int limit) {
  if (n < 0) throw InvalidInput("enumerate_class: negative length");
  if (n > limit)
    throw ResourceLimit("enumerate_class: n = " + std::to_string(n) + " exceeds limit " +
                        std::to_string(limit));
  const PatternSet all = ambient == Ambient::Schroeder ? patterns.united(PatternSet::schroeder())
                                                       : patterns;
  std::vector<PatternPlan> plans;
  for (const auto& p : all)
    if (p.size() <= n) plans.push_back(make_plan(p.entries()));

  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

  // Each new entry is checked only against occurrences that end at it.
  std::function<void()> grow = [&]() {
    if (static_cast<int>(prefix.size()) == n) {
      visit(Permutation(prefix));
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      prefix.push_back(v);
      bool ok = true;
      for (const auto& plan : plans) {
        if (plan.lower.size() > prefix.size()) continue;
        if (Matcher(prefix, plan, true, true).run() > 0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used[v] = true;
        grow();
        used[v] = false;
      }
      prefix.pop_back();
    }
  };
  grow();
}

std::vector<Permutation> enumerate_class(int n, const PatternSet& patterns, Ambient ambient,
                                         int limit) {
  std::vector<Permutation> out;
  for_each_in_class(n, patterns, ambient, [&](const Permutation& p) { out.push_back(p); }, limit);
  return out;
}

std::uint64_t count_class(int n, const PatternSet& patterns, Ambient ambient, int limit) {
  std::uint64_t count = 0;
  for_each_in_class(n, patterns, ambient, [&](const Permutation&) { ++count; }, limit);
  return count;
}

}  // namespace schroeder
