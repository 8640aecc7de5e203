#pragma once

#include "cyclefactor/count_table.hpp"
#include "cyclefactor/partition.hpp"
#include "cyclefactor/permutation.hpp"

#include <map>

namespace cyclefactor {

/// Brute-force ground truth. Everything here is an exact exhaustive count,
/// independent of the recurrence engine. Pair counts over two n-cycle
/// coordinates use conjugation sections (one coordinate fixed, result
/// scaled by (n-1)!) only where relabeling invariance justifies it; the
/// separation counts enumerate both coordinates because separation is not
/// conjugation-invariant.

/// Number of permutations pi of type lambda whose diagonal s0 o pi^{-1}
/// has type eta, with s0 the canonical n-cycle 1 -> 2 -> ... -> n -> 1.
/// Multiply by (n-1)! for the count over all upper horizontals.
Bigint count_fixed_s(const Partition& eta, const Partition& lambda, int n);

/// For each mu |- n: the number of pairs (u, v) of n-cycles with
/// cycle_type(u o v) = mu.
CountTable p_long_table_oracle(int n, int threads = 0);

/// Same table computed with an arbitrary fixed first coordinate
/// (conjugation-section cross-check).
CountTable p_long_table_oracle_fixed_first(const Permutation& first, int threads = 0);

/// Counts over all upper horizontals (scaled by (n-1)!), keyed by
/// (diagonal type, exceedance count), for verticals of type lambda.
ExceedanceProfile exceedance_profile_oracle(const Partition& lambda, int n);

/// |{(u, v) : u, v are N-cycles, u o v = gamma}|.
Bigint factorization_count_oracle(const Permutation& gamma);

/// C_m(n, k): permutations of [n] with exactly k cycles in which 1..m lie
/// in pairwise distinct cycles.
Bigint separated_stirling_oracle(int n, int m, int k);

/// One S_n sweep giving C_m(n, k) for every k and every m <= m_max.
std::map<std::pair<int, int>, Bigint> separated_stirling_sweep(int n, int m_max);

/// For each k: the number of pairs of n-cycles whose product has k cycles
/// and separates [m]. Full pair enumeration, cost (n-1)!^2.
std::map<int, Bigint> separation_pairs_oracle(int n, int m, int threads = 0);

/// One pass giving separation_pairs_oracle(n, m) for every m <= m_max:
/// result[(m, k)].
std::map<std::pair<int, int>, Bigint> separation_pairs_sweep(int n, int m_max, int threads = 0);

}  // namespace cyclefactor
