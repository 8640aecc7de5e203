#pragma once

#include "cyclefactor/count_table.hpp"
#include "cyclefactor/partition.hpp"

#include <shared_mutex>
#include <vector>

namespace cyclefactor {

/// Memoized triangle of signless Stirling numbers of the first kind:
/// C(n, k) = C(n-1, k-1) + (n-1) C(n-1, k), C(0, 0) = 1. Grow-only;
/// concurrent reads are safe, growth is serialized.
class StirlingCache {
public:
    static StirlingCache& instance();

    /// C(n, k). Requires 0 <= k <= n.
    Bigint get(int n, int k);

private:
    StirlingCache() = default;
    void grow(int n);

    std::shared_mutex mutex_;
    std::vector<std::vector<Bigint>> rows_;
};

/// C(n, k): permutations of [n] with exactly k cycles.
Bigint stirling_first_unsigned(int n, int k);

/// The number of n-cycles v such that (1 2 ... n) o v has k cycles:
/// 2 C(n+1, k) / (n (n+1)) when k and n have the same parity, else 0.
/// The division is exact whenever the parity admits pairs; an inexact
/// division throws (theory violation), it is never rounded.
Bigint zagier_stanley_count(int n, int k);

/// p^{(n)}: pairs of n-cycles classified by the cycle type of their
/// product, computed by the length-descending recurrence
///   (n+1-l(lambda)) p_lambda = sum_{mu splits lambda oddly} kappa p_mu
///                              + (n-1)! z_lambda
/// with wrong-parity entries pinned to zero.
CountTable p_long_table_recurrence(int n);

/// Factorizations of one fixed permutation of type lambda = 1^a 2^b |- N
/// into two N-cycles: (N-1)!/(N+1-a-b) when N and a+b have the same
/// parity, else 0. Rejects partitions with a part >= 3.
Bigint closed_form_1a2b(const Partition& lambda);

/// T_lambda = ((n+1)/2) sum_i i m_i(lambda down (i+1)) p^{(n)}_{lambda down (i+1)}
/// for lambda |- n+1, evaluated from a table for n. Computes 2T first and
/// checks evenness before halving.
Bigint compute_T(const Partition& lambda, const CountTable& table);

/// 2 T_lambda, always an integer; the cross-multiplied form identity
/// checks work with.
Bigint compute_2T(const Partition& lambda, const CountTable& table);

/// Pairs of n-cycles whose product has k cycles and separates [m]:
/// 2 (n-1)! C_m(n+1, k) / ((n+m)(n+1-m)). cm must be C_m(n+1, k).
/// Returns 0 when k and n have opposite parity (no such pairs exist and
/// the quotient is not integral there).
Bigint separation_pairs_formula(int n, int m, int k, const Bigint& cm);

}  // namespace cyclefactor
