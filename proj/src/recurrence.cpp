#include "cyclefactor/recurrence.hpp"

#include <mutex>
#include <stdexcept>

namespace cyclefactor {

StirlingCache& StirlingCache::instance() {
    static StirlingCache cache;
    return cache;
}

void StirlingCache::grow(int n) {
    std::unique_lock lock(mutex_);
    if (static_cast<int>(rows_.size()) > n) return;
    if (rows_.empty()) rows_.push_back({Bigint(1)});  // C(0, 0) = 1
    for (int m = static_cast<int>(rows_.size()); m <= n; ++m) {
        std::vector<Bigint> row(static_cast<size_t>(m) + 1);
        row[0] = 0;
        const auto& prev = rows_[static_cast<size_t>(m - 1)];
        for (int k = 1; k <= m; ++k) {
            row[static_cast<size_t>(k)] = (k <= m - 1 ? prev[static_cast<size_t>(k)] * (m - 1) : Bigint(0));
            row[static_cast<size_t>(k)] += prev[static_cast<size_t>(k - 1)];
        }
        rows_.push_back(std::move(row));
    }
}

Bigint StirlingCache::get(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("stirling: need 0 <= k <= n");
    {
        std::shared_lock lock(mutex_);
        if (static_cast<int>(rows_.size()) > n) return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
    }
    grow(n);
    std::shared_lock lock(mutex_);
    return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

Bigint stirling_first_unsigned(int n, int k) {
    return StirlingCache::instance().get(n, k);
}

Bigint zagier_stanley_count(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("zagier_stanley_count: need 1 <= k <= n");
    if ((n - k) % 2 != 0) return 0;
    return exact_div(2 * stirling_first_unsigned(n + 1, k), Bigint(n) * (n + 1));
}

CountTable p_long_table_recurrence(int n) {
    if (n < 1) throw std::invalid_argument("p_long_table_recurrence: n must be >= 1");
    CountTable table(n, Source::recurrence);
    const Bigint fact = factorial(n - 1);
    // Entries iterate longest-first, so every split partner mu (which is
    // strictly longer) is already final when lambda is processed.
    for (const auto& lambda : partitions_of(n)) {
        if ((lambda.length() - n) % 2 != 0) continue;  // stays 0
        Bigint acc = fact * z(lambda);
        for (int arity = 3; arity <= lambda.max_part(); arity += 2) {
            for (const auto& edge : refinements_with_kappa(lambda, arity)) {
                acc += edge.kappa * table.at(edge.finer);
            }
        }
        table.set(lambda, exact_div(acc, n + 1 - lambda.length()));
    }
    return table;
}

Bigint closed_form_1a2b(const Partition& lambda) {
    if (lambda.max_part() > 2) {
        throw std::invalid_argument("closed_form_1a2b: partition has a part >= 3");
    }
    const int N = lambda.n();
    if (N < 1) throw std::invalid_argument("closed_form_1a2b: empty partition");
    if ((N - lambda.length()) % 2 != 0) return 0;
    return exact_div(factorial(N - 1), N + 1 - lambda.length());
}

Bigint compute_2T(const Partition& lambda, const CountTable& table) {
    const int n = table.n();
    if (lambda.n() != n + 1) {
        throw std::invalid_argument("compute_T: lambda must partition table.n() + 1");
    }
    Bigint sum = 0;
    for (int i = 1; i <= lambda.max_part() - 1; ++i) {
        if (lambda.multiplicity(i + 1) == 0) continue;
        Partition mu = down_shift(lambda, i + 1);
        sum += Bigint(i) * mu.multiplicity(i) * table.at(mu);
    }
    return Bigint(n + 1) * sum;
}

Bigint compute_T(const Partition& lambda, const CountTable& table) {
    Bigint twice = compute_2T(lambda, table);
    if (twice % 2 != 0) {
        throw std::logic_error("compute_T: odd intermediate for lambda=" + lambda.to_string());
    }
    return twice / 2;
}

Bigint separation_pairs_formula(int n, int m, int k, const Bigint& cm) {
    if (m < 1 || m > n) throw std::invalid_argument("separation_pairs_formula: need 1 <= m <= n");
    if (k < 1 || k > n) throw std::invalid_argument("separation_pairs_formula: need 1 <= k <= n");
    if ((n - k) % 2 != 0) return 0;
    return exact_div(2 * factorial(n - 1) * cm, Bigint(n + m) * (n + 1 - m));
}

}  // namespace cyclefactor
