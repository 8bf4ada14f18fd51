#pragma once

#include <gmpxx.h>

#include <string>

namespace schroeder {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Which zero/one conventions a binomial coefficient follows at the edges.
///  - Standard: C(i, j) = 0 whenever j < 0 or i < j.
///  - Extended: as Standard, but C(a, 0) = 1 for every integer a (a = -1 included).
enum class BinomMode { Standard, Extended };

BigInt binom(long a, long b, BinomMode mode);

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const BigRat& v) { return v.get_str(); }

}  // namespace schroeder
