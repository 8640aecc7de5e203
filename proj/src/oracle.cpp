#include "cyclefactor/oracle.hpp"

#include "parallel_util.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace cyclefactor {

namespace {

// Image map of the canonical n-cycle 1 -> 2 -> ... -> n -> 1.
std::vector<int> canonical_cycle_images(int n) {
    std::vector<int> img(n);
    for (int x = 1; x <= n; ++x) img[x - 1] = x % n + 1;
    return img;
}

using LocalTable = std::map<std::vector<int>, std::uint64_t>;

// Classifies compose(first, v) over all n-cycles v in [lo, hi).
void classify_products(const std::vector<int>& first, std::uint64_t lo, std::uint64_t hi,
                       LocalTable& table) {
    const int n = static_cast<int>(first.size());
    std::vector<int> prod(n), parts;
    std::vector<char> seen;
    for_each_n_cycle_images(n, lo, hi, [&](const std::vector<int>& v) {
        for (int x = 1; x <= n; ++x) prod[x - 1] = first[v[x - 1] - 1];
        cycle_type_of_images(prod, seen, parts);
        ++table[parts];
    });
}

CountTable table_from_locals(int n, const std::vector<LocalTable>& locals, const Bigint& scale) {
    CountTable out(n, Source::oracle);
    std::map<std::vector<int>, Bigint> merged;
    for (const auto& local : locals) {
        for (const auto& [parts, count] : local) merged[parts] += count;
    }
    for (auto& [parts, count] : merged) out.set(Partition(parts), count * scale);
    return out;
}

}  // namespace

Bigint count_fixed_s(const Partition& eta, const Partition& lambda, int n) {
    if (eta.n() != n || lambda.n() != n) {
        throw std::invalid_argument("count_fixed_s: partitions must both be of n");
    }
    const std::vector<int> c = canonical_cycle_images(n);
    std::uint64_t count = 0;
    std::vector<int> diag(n), inv(n), parts;
    std::vector<char> seen;
    for_each_by_type(lambda, [&](const std::vector<int>& pi) {
        for (int x = 1; x <= n; ++x) inv[pi[x - 1] - 1] = x;
        for (int x = 1; x <= n; ++x) diag[x - 1] = c[inv[x - 1] - 1];
        cycle_type_of_images(diag, seen, parts);
        if (static_cast<int>(parts.size()) == eta.length() &&
            std::equal(parts.begin(), parts.end(), eta.parts().begin())) {
            ++count;
        }
    });
    return count;
}

CountTable p_long_table_oracle(int n, int threads) {
    return p_long_table_oracle_fixed_first(
        Permutation::from_images(canonical_cycle_images(n)), threads);
}

CountTable p_long_table_oracle_fixed_first(const Permutation& first, int threads) {
    const int n = first.size();
    if (n < 1) throw std::invalid_argument("p_long_table_oracle: n must be >= 1");
    if (!first.is_single_cycle()) {
        throw std::invalid_argument("p_long_table_oracle: fixed coordinate must be an n-cycle");
    }
    const std::uint64_t total = n_cycle_count(n);
    threads = detail::resolve_threads(threads);
    std::vector<LocalTable> locals(static_cast<size_t>(std::max(threads, 1)));
    detail::run_partitioned(total, threads, [&](int w, std::uint64_t lo, std::uint64_t hi) {
        classify_products(first.images(), lo, hi, locals[static_cast<size_t>(w)]);
    });
    return table_from_locals(n, locals, factorial(n - 1));
}

ExceedanceProfile exceedance_profile_oracle(const Partition& lambda, int n) {
    if (lambda.n() != n) throw std::invalid_argument("exceedance_profile_oracle: lambda must be of n");
    const std::vector<int> c = canonical_cycle_images(n);
    std::map<std::pair<std::vector<int>, int>, std::uint64_t> raw;
    std::vector<int> diag(n), inv(n), parts;
    std::vector<char> seen;
    for_each_by_type(lambda, [&](const std::vector<int>& pi) {
        int exc = 0;
        for (int x = 1; x <= n; ++x) {
            if (pi[x - 1] > x) ++exc;
            inv[pi[x - 1] - 1] = x;
        }
        for (int x = 1; x <= n; ++x) diag[x - 1] = c[inv[x - 1] - 1];
        cycle_type_of_images(diag, seen, parts);
        ++raw[{parts, exc}];
    });
    const Bigint scale = factorial(n - 1);
    ExceedanceProfile out;
    for (const auto& [key, count] : raw) {
        out[{Partition(key.first), key.second}] = scale * count;
    }
    return out;
}

Bigint factorization_count_oracle(const Permutation& gamma) {
    const int n = gamma.size();
    if (n < 1) throw std::invalid_argument("factorization_count_oracle: empty ground set");
    std::uint64_t count = 0;
    std::vector<int> v(n), inv(n), parts;
    std::vector<char> seen;
    for_each_n_cycle_images(n, 0, n_cycle_count(n), [&](const std::vector<int>& u) {
        // v = u^{-1} o gamma; count when v is a single cycle
        for (int x = 1; x <= n; ++x) inv[u[x - 1] - 1] = x;
        for (int x = 1; x <= n; ++x) v[x - 1] = inv[gamma(x) - 1];
        cycle_type_of_images(v, seen, parts);
        if (parts.size() == 1) ++count;
    });
    return count;
}

std::map<std::pair<int, int>, Bigint> separated_stirling_sweep(int n, int m_max) {
    if (m_max < 1 || m_max > n) throw std::invalid_argument("separated_stirling_sweep: need 1 <= m <= n");
    // bins[k][p]: permutations with k cycles whose longest separated prefix
    // of {1..m_max} has length exactly p
    std::vector<std::vector<std::uint64_t>> bins(
        static_cast<size_t>(n + 1), std::vector<std::uint64_t>(static_cast<size_t>(m_max + 1), 0));
    std::vector<int> cyc_id(n);
    for_each_permutation(n, [&](const std::vector<int>& img) {
        int k = 0;
        std::fill(cyc_id.begin(), cyc_id.end(), 0);
        for (int x = 1; x <= n; ++x) {
            if (cyc_id[x - 1]) continue;
            ++k;
            int y = x;
            do {
                cyc_id[y - 1] = k;
                y = img[y - 1];
            } while (y != x);
        }
        int prefix = m_max;
        for (int t = 2; t <= m_max; ++t) {
            bool dup = false;
            for (int s = 1; s < t && !dup; ++s) dup = cyc_id[s - 1] == cyc_id[t - 1];
            if (dup) {
                prefix = t - 1;
                break;
            }
        }
        ++bins[static_cast<size_t>(k)][static_cast<size_t>(prefix)];
    });
    std::map<std::pair<int, int>, Bigint> out;
    for (int m = 1; m <= m_max; ++m) {
        for (int k = 1; k <= n; ++k) {
            std::uint64_t total = 0;
            for (int p = m; p <= m_max; ++p) total += bins[static_cast<size_t>(k)][static_cast<size_t>(p)];
            out[{m, k}] = total;
        }
    }
    return out;
}

Bigint separated_stirling_oracle(int n, int m, int k) {
    if (m < 1 || m > n) throw std::invalid_argument("separated_stirling_oracle: need 1 <= m <= n");
    if (k < 1 || k > n) throw std::invalid_argument("separated_stirling_oracle: need 1 <= k <= n");
    return separated_stirling_sweep(n, m).at({m, k});
}

std::map<std::pair<int, int>, Bigint> separation_pairs_sweep(int n, int m_max, int threads) {
    if (m_max < 1 || m_max > n) throw std::invalid_argument("separation_pairs_sweep: need 1 <= m <= n");
    const std::uint64_t cycles = n_cycle_count(n);

    // Separation of [m] is not conjugation-invariant, so no coordinate can
    // be fixed here; both coordinates are enumerated, streamed.
    threads = detail::resolve_threads(threads);
    using Bins = std::vector<std::vector<std::uint64_t>>;  // [k][prefix]
    std::vector<Bins> locals(
        static_cast<size_t>(std::max(threads, 1)),
        Bins(static_cast<size_t>(n + 1), std::vector<std::uint64_t>(static_cast<size_t>(m_max + 1), 0)));

    detail::run_partitioned(cycles, threads, [&](int w, std::uint64_t lo, std::uint64_t hi) {
        auto& bins = locals[static_cast<size_t>(w)];
        std::vector<int> cyc_id(n);
        std::vector<int> prod(n);
        for_each_n_cycle_images(n, lo, hi, [&](const std::vector<int>& u) {
            for_each_n_cycle_images(n, 0, cycles, [&](const std::vector<int>& v) {
                for (int x = 1; x <= n; ++x) prod[x - 1] = u[v[x - 1] - 1];
                int k = 0;
                std::fill(cyc_id.begin(), cyc_id.end(), 0);
                for (int x = 1; x <= n; ++x) {
                    if (cyc_id[x - 1]) continue;
                    ++k;
                    int y = x;
                    do {
                        cyc_id[y - 1] = k;
                        y = prod[y - 1];
                    } while (y != x);
                }
                int prefix = m_max;
                for (int t = 2; t <= m_max; ++t) {
                    bool dup = false;
                    for (int s = 1; s < t && !dup; ++s) dup = cyc_id[s - 1] == cyc_id[t - 1];
                    if (dup) {
                        prefix = t - 1;
                        break;
                    }
                }
                ++bins[static_cast<size_t>(k)][static_cast<size_t>(prefix)];
            });
        });
    });

    std::map<std::pair<int, int>, Bigint> out;
    for (int m = 1; m <= m_max; ++m) {
        for (int k = 1; k <= n; ++k) {
            std::uint64_t total = 0;
            for (int w = 0; w < std::max(threads, 1); ++w) {
                for (int p = m; p <= m_max; ++p) {
                    total += locals[static_cast<size_t>(w)][static_cast<size_t>(k)][static_cast<size_t>(p)];
                }
            }
            out[{m, k}] = total;
        }
    }
    return out;
}

std::map<int, Bigint> separation_pairs_oracle(int n, int m, int threads) {
    auto sweep = separation_pairs_sweep(n, m, threads);
    std::map<int, Bigint> out;
    for (int k = 1; k <= n; ++k) out[k] = sweep.at({m, k});
    return out;
}

}  // namespace cyclefactor
