#pragma once

#include "cyclefactor/count_table.hpp"
#include "cyclefactor/partition.hpp"
#include "cyclefactor/permutation.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cyclefactor {

/// One failed comparison inside an identity sweep.
struct FailureWitness {
    std::string context;
    Bigint lhs;
    Bigint rhs;
};

struct IdentityReport {
    std::string identity;
    int n = 0;
    std::map<std::string, std::string> params;
    bool pass = false;
    std::int64_t cases_checked = 0;
    std::vector<FailureWitness> failures;

    /// Byte-stable for fixed inputs.
    std::string to_json() const;
};

struct IdentityOptions {
    /// Table source for the table-backed checks. long_eq always reads the
    /// oracle table (checking the recurrence against itself would be
    /// vacuous).
    Source source = Source::recurrence;
    int threads = 0;
    /// Skips the per-identity cost envelope.
    bool force = false;
};

/// The registered identity tags, in a fixed order.
const std::vector<std::string>& identity_names();

/// Largest n the tag runs at without force.
int identity_envelope(const std::string& name);

/// Runs one identity sweep at level n. Throws std::invalid_argument for an
/// unknown tag, std::domain_error when n exceeds the envelope without
/// force, and std::logic_error if the sweep turns out vacuous.
IdentityReport run_identity(const std::string& name, int n, const IdentityOptions& opts = {});

// --- key lemma set realization --------------------------------------------

/// Block order used when concatenating chosen cycles into one cycle. Each
/// cycle is written starting at its minimum; the options differ in how the
/// blocks are arranged around the merged cycle.
enum class MergeOrder {
    by_min,              // blocks ordered by minimum element, ascending
    by_length_then_min,  // by length descending, ties by minimum ascending
};

/// Concatenates the cycles of p selected by `which` (indices into
/// p.cycles()) into a single cycle; other cycles are untouched.
Permutation merge_cycles(const Permutation& p, const std::vector<std::size_t>& which,
                         MergeOrder order);

/// The permutation with cycles (1 .. mu_1)(mu_1+1 .. mu_1+mu_2) ...,
/// parts taken in canonical (non-increasing) order.
Permutation canonical_permutation_of_type(const Partition& mu);

struct KeyLemmaSetsReport {
    Partition lambda;  // |- n+1
    Partition mu;      // |- n
    int parts_merged = 0;  // 2j+1

    /// i -> |A_i|: elements built by merging 2j+1 cycles of the canonical
    /// mu-permutation and inserting n+1 into a cycle of length i.
    std::map<int, std::int64_t> a_sizes;
    /// i -> |B_i|: elements built by inserting n+1 into a length-i cycle of
    /// the canonical mu-permutation and then merging 2j+1 cycles.
    std::map<int, std::int64_t> b_sizes;

    std::int64_t a_total = 0;
    std::int64_t b_total = 0;
    bool a_parts_disjoint = false;
    bool b_parts_disjoint = false;
    bool a_equals_b = false;

    /// The arithmetic coefficients the set sizes must reproduce.
    Bigint lhs_coefficient;
    Bigint rhs_coefficient;
    bool coefficients_match = false;

    std::string to_json() const;
};

/// Materializes the two permutation sets behind the mu-coefficient of the
/// split-merge double-sum identity and checks they coincide. Requires
/// lambda |- n+1, mu |- n with l(mu) = l(lambda) + 2j for some j > 0.
KeyLemmaSetsReport key_lemma_sets(const Partition& lambda, const Partition& mu,
                                  MergeOrder order = MergeOrder::by_min);

}  // namespace cyclefactor
