#include "cyclefactor/identities.hpp"

#include "cyclefactor/oracle.hpp"
#include "cyclefactor/recurrence.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>

namespace cyclefactor {

namespace {

// ---- shared caches -------------------------------------------------------

std::mutex cache_mutex;

const CountTable& pair_table(int n, Source source, int threads) {
    static std::map<std::pair<int, int>, CountTable> cache;
    std::lock_guard lock(cache_mutex);
    auto key = std::make_pair(n, static_cast<int>(source));
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, source == Source::oracle ? p_long_table_oracle(n, threads)
                                                         : p_long_table_recurrence(n))
                 .first;
    }
    return it->second;
}

const std::map<Partition, ExceedanceProfile>& profiles(int n) {
    static std::map<int, std::map<Partition, ExceedanceProfile>> cache;
    std::lock_guard lock(cache_mutex);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::map<Partition, ExceedanceProfile> all;
        for (const auto& lambda : partitions_of(n)) {
            all.emplace(lambda, exceedance_profile_oracle(lambda, n));
        }
        it = cache.emplace(n, std::move(all)).first;
    }
    return it->second;
}

// ---- report plumbing -----------------------------------------------------

void check(IdentityReport& report, const std::string& context, const Bigint& lhs, const Bigint& rhs) {
    if (lhs != rhs) report.failures.push_back({context, lhs, rhs});
}

// sum over odd splits of lambda of kappa * value(mu)
Bigint odd_split_sum(const Partition& lambda, const std::function<Bigint(const Partition&)>& value) {
    Bigint sum = 0;
    for (int arity = 3; arity <= lambda.max_part(); arity += 2) {
        for (const auto& edge : refinements_with_kappa(lambda, arity)) {
            sum += edge.kappa * value(edge.finer);
        }
    }
    return sum;
}

// sum_i i m_i(lambda down (i+1)) * value(lambda down (i+1))
Bigint down_shift_sum(const Partition& lambda, const std::function<Bigint(const Partition&)>& value) {
    Bigint sum = 0;
    for (int i = 1; i + 1 <= lambda.max_part(); ++i) {
        if (lambda.multiplicity(i + 1) == 0) continue;
        Partition mu = down_shift(lambda, i + 1);
        sum += Bigint(i) * mu.multiplicity(i) * value(mu);
    }
    return sum;
}

// ---- the identity sweeps -------------------------------------------------

void run_theorem_main(int n, const IdentityOptions& opts, IdentityReport& report) {
    const auto& table = pair_table(n, opts.source, opts.threads);
    const Bigint rhs_scale = 2 * factorial(n - 1);
    for (const auto& lambda : partitions_of(n + 1)) {
        if ((lambda.length() - n) % 2 != 0) continue;
        ++report.cases_checked;
        check(report, "lambda=(" + lambda.to_string() + ")", compute_2T(lambda, table),
              rhs_scale * z(lambda));
    }
}

void run_zagier_stanley(int n, const IdentityOptions& opts, IdentityReport& report) {
    const auto& table = pair_table(n, opts.source, opts.threads);
    std::map<int, Bigint> marginal;
    for (const auto& [mu, count] : table.entries()) marginal[mu.length()] += count;
    const Bigint fact = factorial(n - 1);
    for (int k = 1; k <= n; ++k) {
        ++report.cases_checked;
        check(report, "k=" + std::to_string(k), marginal[k], fact * zagier_stanley_count(n, k));
    }
}

void run_gen_eq(int n, const IdentityOptions&, IdentityReport& report) {
    const auto& all = profiles(n);
    // eta-marginals: p^eta_lambda for every (lambda, eta)
    std::map<Partition, std::map<Partition, Bigint>> marginal;
    for (const auto& [lambda, profile] : all) {
        auto& row = marginal[lambda];
        for (const auto& [key, count] : profile) row[key.first] += count;
    }
    for (const auto& [lambda, profile] : all) {
        for (const auto& eta : partitions_of(n)) {
            ++report.cases_checked;
            Bigint lhs = 0;
            for (const auto& [key, count] : profile) {
                if (key.first == eta) lhs += Bigint(n - lambda.length() - key.second) * count;
            }
            Bigint rhs = odd_split_sum(lambda, [&](const Partition& mu) -> Bigint {
                auto row = marginal.find(mu);
                auto it = row->second.find(eta);
                return it == row->second.end() ? Bigint(0) : it->second;
            });
            check(report, "lambda=(" + lambda.to_string() + ") eta=(" + eta.to_string() + ")", lhs, rhs);
        }
    }
}

void run_long_eq(int n, const IdentityOptions& opts, IdentityReport& report) {
    // The recurrence builds tables from this very equation, so the check is
    // only informative against the oracle table.
    const auto& table = pair_table(n, Source::oracle, opts.threads);
    const Bigint fact = factorial(n - 1);
    for (const auto& lambda : partitions_of(n)) {
        ++report.cases_checked;
        if ((lambda.length() - n) % 2 != 0) {
            check(report, "lambda=(" + lambda.to_string() + ") parity-zero", table.at(lambda), 0);
            continue;
        }
        Bigint lhs = Bigint(n + 1 - lambda.length()) * table.at(lambda);
        Bigint rhs =
            odd_split_sum(lambda, [&](const Partition& mu) { return table.at(mu); }) + fact * z(lambda);
        check(report, "lambda=(" + lambda.to_string() + ")", lhs, rhs);
    }
}

void run_exceedance_sum(int n, const IdentityOptions&, IdentityReport& report) {
    const auto& all = profiles(n);
    const Bigint fact = factorial(n - 1);
    for (const auto& [lambda, profile] : all) {
        ++report.cases_checked;
        Bigint total = 0;
        for (const auto& [key, count] : profile) total += Bigint(key.second) * count;
        check(report, "lambda=(" + lambda.to_string() + ") half-count", 2 * total,
              Bigint(n - lambda.multiplicity(1)) * fact * z(lambda));
        Bigint rhs = Bigint(n - lambda.length()) * fact * z(lambda) -
                     odd_split_sum(lambda, [&](const Partition& mu) { return fact * z(mu); });
        check(report, "lambda=(" + lambda.to_string() + ") split-form", total, rhs);
    }
}

void run_base_recur(int n, const IdentityOptions&, IdentityReport& report) {
    const int N = n + 1;
    for (const auto& lambda : partitions_of(N)) {
        ++report.cases_checked;
        Bigint zl = z(lambda);
        Bigint lhs = 2 * Bigint(N - lambda.length()) * zl;
        Bigint rhs = 2 * odd_split_sum(lambda, [](const Partition& mu) { return z(mu); }) +
                     zl * (N - lambda.multiplicity(1));
        check(report, "lambda=(" + lambda.to_string() + ")", lhs, rhs);
    }
}

void run_downarrow_eq(int n, const IdentityOptions& opts, IdentityReport& report) {
    const auto& table = pair_table(n, opts.source, opts.threads);
    const Bigint fact = factorial(n - 1);
    for (const auto& lambda : partitions_of(n + 1)) {
        if ((lambda.length() - n) % 2 != 0) continue;
        for (int i = 1; i + 1 <= lambda.max_part(); ++i) {
            if (lambda.multiplicity(i + 1) == 0) continue;
            ++report.cases_checked;
            Partition nu = down_shift(lambda, i + 1);
            Bigint weight = Bigint(n + 1) * i * nu.multiplicity(i);
            Bigint lhs = Bigint(n + 1 - lambda.length()) * weight * table.at(nu);
            Bigint rhs =
                weight * odd_split_sum(nu, [&](const Partition& mu) { return table.at(mu); }) +
                Bigint(i + 1) * lambda.multiplicity(i + 1) * fact * z(lambda);
            check(report, "lambda=(" + lambda.to_string() + ") i=" + std::to_string(i), lhs, rhs);
        }
    }
}

void run_key_lemma(int n, const IdentityOptions& opts, IdentityReport& report) {
    const auto& table = pair_table(n, opts.source, opts.threads);
    auto at = [&](const Partition& mu) { return table.at(mu); };
    for (const auto& lambda : partitions_of(n + 1)) {
        ++report.cases_checked;
        Bigint lhs = down_shift_sum(
            lambda, [&](const Partition& nu) { return odd_split_sum(nu, at); });
        Bigint rhs = odd_split_sum(
            lambda, [&](const Partition& mu) { return down_shift_sum(mu, at); });
        check(report, "lambda=(" + lambda.to_string() + ")", lhs, rhs);
    }
}

void run_recur_T(int n, const IdentityOptions& opts, IdentityReport& report) {
    const auto& table = pair_table(n, opts.source, opts.threads);
    const Bigint fact = factorial(n - 1);
    for (const auto& lambda : partitions_of(n + 1)) {
        if ((lambda.length() - n) % 2 != 0) continue;
        ++report.cases_checked;
        Bigint lhs = Bigint(n + 1 - lambda.length()) * compute_2T(lambda, table);
        Bigint rhs =
            odd_split_sum(lambda, [&](const Partition& mu) { return compute_2T(mu, table); }) +
            fact * z(lambda) * (n + 1 - lambda.multiplicity(1));
        check(report, "lambda=(" + lambda.to_string() + ")", lhs, rhs);
    }
}

void run_inverse_pairing(int n, const IdentityOptions&, IdentityReport& report) {
    std::vector<int> inv(n);
    for_each_permutation(n, [&](const std::vector<int>& img) {
        ++report.cases_checked;
        int exc = 0, exc_inv = 0, fixed = 0;
        for (int x = 1; x <= n; ++x) {
            if (img[x - 1] > x) ++exc;
            if (img[x - 1] == x) ++fixed;
            inv[img[x - 1] - 1] = x;
        }
        for (int x = 1; x <= n; ++x) {
            if (inv[x - 1] > x) ++exc_inv;
        }
        if (exc_inv != n - fixed - exc) {
            report.failures.push_back({"pi=" + Permutation::from_images(img).to_cycle_string(),
                                       Bigint(exc_inv), Bigint(n - fixed - exc)});
        }
    });
}

void run_separation(int n, const IdentityOptions& opts, IdentityReport& report) {
    const int m_max = std::min(3, n);
    report.params["m_max"] = std::to_string(m_max);
    auto oracle = separation_pairs_sweep(n, m_max, opts.threads);
    auto stirling = separated_stirling_sweep(n + 1, m_max);
    for (int m = 1; m <= m_max; ++m) {
        for (int k = 1; k <= n; ++k) {
            ++report.cases_checked;
            Bigint formula = separation_pairs_formula(n, m, k, stirling.at({m, k}));
            check(report, "m=" + std::to_string(m) + " k=" + std::to_string(k), formula,
                  oracle.at({m, k}));
        }
    }
}

struct IdentityEntry {
    const char* name;
    int envelope;
    void (*run)(int, const IdentityOptions&, IdentityReport&);
};

constexpr IdentityEntry kIdentities[] = {
    {"theorem_main", 11, run_theorem_main},
    {"zagier_stanley", 11, run_zagier_stanley},
    {"gen_eq", 8, run_gen_eq},
    {"long_eq", 8, run_long_eq},
    {"exceedance_sum", 8, run_exceedance_sum},
    {"base_recur", 30, run_base_recur},
    {"downarrow_eq", 11, run_downarrow_eq},
    {"key_lemma", 11, run_key_lemma},
    {"recur_T", 11, run_recur_T},
    {"inverse_pairing", 8, run_inverse_pairing},
    {"separation", 8, run_separation},
};

const IdentityEntry* find_identity(const std::string& name) {
    for (const auto& entry : kIdentities) {
        if (name == entry.name) return &entry;
    }
    return nullptr;
}

}  // namespace

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& entry : kIdentities) out.emplace_back(entry.name);
        return out;
    }();
    return names;
}

int identity_envelope(const std::string& name) {
    const IdentityEntry* entry = find_identity(name);
    if (!entry) throw std::invalid_argument("unknown identity tag: " + name);
    return entry->envelope;
}

IdentityReport run_identity(const std::string& name, int n, const IdentityOptions& opts) {
    const IdentityEntry* entry = find_identity(name);
    if (!entry) throw std::invalid_argument("unknown identity tag: " + name);
    if (n < 1) throw std::invalid_argument("identity sweep needs n >= 1");
    if (n > entry->envelope && !opts.force) {
        throw std::domain_error("identity " + name + " is limited to n <= " +
                                std::to_string(entry->envelope) + " (force to override)");
    }
    IdentityReport report;
    report.identity = name;
    report.n = n;
    entry->run(n, opts, report);
    if (report.cases_checked == 0) {
        throw std::logic_error("identity " + name + " swept no cases at n=" + std::to_string(n));
    }
    report.pass = report.failures.empty();
    return report;
}

std::string IdentityReport::to_json() const {
    nlohmann::json out;
    out["identity"] = identity;
    out["n"] = n;
    out["status"] = pass ? "pass" : "fail";
    out["cases_checked"] = cases_checked;
    auto fails = nlohmann::json::array();
    for (const auto& f : failures) {
        fails.push_back({{"context", f.context}, {"lhs", f.lhs.str()}, {"rhs", f.rhs.str()}});
    }
    out["failures"] = std::move(fails);
    if (!params.empty()) {
        nlohmann::json p;
        for (const auto& [k, v] : params) p[k] = v;
        out["params"] = std::move(p);
    }
    return out.dump();
}

// ---- key lemma set realization --------------------------------------------

Permutation canonical_permutation_of_type(const Partition& mu) {
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int part : mu.parts()) {
        std::vector<int> cyc(static_cast<size_t>(part));
        for (int i = 0; i < part; ++i) cyc[static_cast<size_t>(i)] = next++;
        cycles.push_back(std::move(cyc));
    }
    return Permutation::from_cycles(mu.n(), cycles);
}

Permutation merge_cycles(const Permutation& p, const std::vector<std::size_t>& which,
                         MergeOrder order) {
    auto cycles = p.cycles();
    std::vector<bool> chosen(cycles.size(), false);
    std::vector<std::vector<int>> blocks;
    for (std::size_t idx : which) {
        if (idx >= cycles.size() || chosen[idx]) {
            throw std::invalid_argument("merge_cycles: bad cycle selection");
        }
        chosen[idx] = true;
        blocks.push_back(cycles[idx]);
    }
    if (blocks.size() < 2) throw std::invalid_argument("merge_cycles: need at least two cycles");

    // Each block already starts at its minimum (Permutation::cycles()).
    std::sort(blocks.begin(), blocks.end(), [&](const auto& a, const auto& b) {
        if (order == MergeOrder::by_length_then_min && a.size() != b.size()) {
            return a.size() > b.size();
        }
        return a.front() < b.front();
    });

    std::vector<int> word;
    for (const auto& block : blocks) word.insert(word.end(), block.begin(), block.end());

    std::vector<std::vector<int>> result;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (!chosen[i]) result.push_back(cycles[i]);
    }
    result.push_back(std::move(word));
    return Permutation::from_cycles(p.size(), result);
}

namespace {

// All size-t index subsets of {0..count-1}, via the combination mask trick.
template <typename F>
void for_each_subset(std::size_t count, std::size_t t, F&& f) {
    if (t > count) return;
    std::vector<bool> mask(count, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(t), true);
    std::vector<std::size_t> subset;
    do {
        subset.clear();
        for (std::size_t i = 0; i < count; ++i) {
            if (mask[i]) subset.push_back(i);
        }
        f(subset);
    } while (std::prev_permutation(mask.begin(), mask.end()));
}

}  // namespace

KeyLemmaSetsReport key_lemma_sets(const Partition& lambda, const Partition& mu, MergeOrder order) {
    if (lambda.n() != mu.n() + 1) {
        throw std::invalid_argument("key_lemma_sets: need lambda |- n+1 and mu |- n");
    }
    const int j2 = mu.length() - lambda.length();
    if (j2 <= 0 || j2 % 2 != 0) {
        throw std::invalid_argument("key_lemma_sets: no admissible j for (" + lambda.to_string() +
                                    "), (" + mu.to_string() + ")");
    }
    const int parts_merged = j2 + 1;
    const int big = lambda.n();  // the inserted element n+1

    KeyLemmaSetsReport report;
    report.lambda = lambda;
    report.mu = mu;
    report.parts_merged = parts_merged;

    const Permutation mu_perm = canonical_permutation_of_type(mu);
    const auto mu_cycles = mu_perm.cycles();

    // A: merge 2j+1 cycles of mu_perm, then insert n+1 into a length-i cycle.
    std::set<Permutation> a_union;
    for (int i = 1; i + 1 <= lambda.max_part(); ++i) {
        if (lambda.multiplicity(i + 1) == 0) continue;
        Partition nu = down_shift(lambda, i + 1);
        std::set<Permutation> a_i;
        for_each_subset(mu_cycles.size(), static_cast<std::size_t>(parts_merged),
                        [&](const std::vector<std::size_t>& subset) {
                            Permutation merged = merge_cycles(mu_perm, subset, order);
                            if (merged.cycle_type() != nu) return;
                            for (const auto& cyc : merged.cycles()) {
                                if (static_cast<int>(cyc.size()) != i) continue;
                                for (int a : cyc) a_i.insert(insert_element(merged, big, a));
                            }
                        });
        report.a_sizes[i] = static_cast<std::int64_t>(a_i.size());
        report.a_total += static_cast<std::int64_t>(a_i.size());
        a_union.insert(a_i.begin(), a_i.end());
    }
    report.a_parts_disjoint = static_cast<std::int64_t>(a_union.size()) == report.a_total;

    // B: insert n+1 into a length-i cycle of mu_perm, then merge 2j+1 cycles.
    std::set<Permutation> b_union;
    int prev_len = -1;
    for (int i : mu.parts()) {
        if (i == prev_len) continue;
        prev_len = i;
        std::set<Permutation> b_i;
        for (const auto& cyc : mu_cycles) {
            if (static_cast<int>(cyc.size()) != i) continue;
            for (int a : cyc) {
                Permutation extended = insert_element(mu_perm, big, a);
                auto ext_cycles = extended.cycles();
                for_each_subset(ext_cycles.size(), static_cast<std::size_t>(parts_merged),
                                [&](const std::vector<std::size_t>& subset) {
                                    Permutation merged = merge_cycles(extended, subset, order);
                                    if (merged.cycle_type() == lambda) b_i.insert(merged);
                                });
            }
        }
        report.b_sizes[i] = static_cast<std::int64_t>(b_i.size());
        report.b_total += static_cast<std::int64_t>(b_i.size());
        b_union.insert(b_i.begin(), b_i.end());
    }
    report.b_parts_disjoint = static_cast<std::int64_t>(b_union.size()) == report.b_total;

    report.a_equals_b = a_union == b_union;

    // The coefficients of the mu-summand on the two sides, from partition
    // arithmetic alone; each set size must reproduce its term.
    report.coefficients_match = true;
    for (int i = 1; i + 1 <= lambda.max_part(); ++i) {
        if (lambda.multiplicity(i + 1) == 0) continue;
        Partition nu = down_shift(lambda, i + 1);
        Bigint term = Bigint(i) * nu.multiplicity(i) * merge_count(mu, nu, parts_merged);
        report.lhs_coefficient += term;
        if (Bigint(report.a_sizes.at(i)) != term) report.coefficients_match = false;
    }
    prev_len = -1;
    for (int i : mu.parts()) {
        if (i == prev_len) continue;
        prev_len = i;
        Bigint term = Bigint(i) * mu.multiplicity(i) * merge_count(up_shift(mu, i), lambda, parts_merged);
        report.rhs_coefficient += term;
        if (Bigint(report.b_sizes.at(i)) != term) report.coefficients_match = false;
    }
    report.coefficients_match = report.coefficients_match &&
                                Bigint(report.a_total) == report.lhs_coefficient &&
                                Bigint(report.b_total) == report.rhs_coefficient;
    return report;
}

std::string KeyLemmaSetsReport::to_json() const {
    nlohmann::json out;
    out["lambda"] = nlohmann::json::array();
    for (int p : lambda.parts()) out["lambda"].push_back(p);
    out["mu"] = nlohmann::json::array();
    for (int p : mu.parts()) out["mu"].push_back(p);
    out["parts_merged"] = parts_merged;
    nlohmann::json a = nlohmann::json::object(), b = nlohmann::json::object();
    for (const auto& [i, sz] : a_sizes) a[std::to_string(i)] = sz;
    for (const auto& [i, sz] : b_sizes) b[std::to_string(i)] = sz;
    out["a_sizes"] = std::move(a);
    out["b_sizes"] = std::move(b);
    out["a_total"] = a_total;
    out["b_total"] = b_total;
    out["a_parts_disjoint"] = a_parts_disjoint;
    out["b_parts_disjoint"] = b_parts_disjoint;
    out["a_equals_b"] = a_equals_b;
    out["lhs_coefficient"] = lhs_coefficient.str();
    out["rhs_coefficient"] = rhs_coefficient.str();
    out["coefficients_match"] = coefficients_match;
    return out.dump();
}

}  // namespace cyclefactor
