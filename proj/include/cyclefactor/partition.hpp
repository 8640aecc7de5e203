#pragma once

#include "cyclefactor/bigint.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace cyclefactor {

/// An integer partition in canonical form: parts sorted non-increasing,
/// every part >= 1. Doubles as a cycle type. The empty partition is the
/// unique partition of 0.
class Partition {
public:
    Partition() = default;

    /// Canonicalizes (sorts descending). Throws std::invalid_argument on a
    /// part < 1.
    explicit Partition(std::vector<int> parts);

    /// Accepts a comma list "3,2,1" or exponent form "1^2 2^1"
    /// (whitespace-separated factors, caret for exponent). Both forms for
    /// the same multiset parse to the same Partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// m_i: the number of parts equal to i.
    int multiplicity(int i) const;

    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

    /// Comma form, e.g. "3,2,1"; empty partition renders as "-".
    std::string to_string() const;

    bool operator==(const Partition&) const = default;

    /// Orders by decreasing length, then lexicographically on the part
    /// sequence. This is also the enumeration order of partitions_of and
    /// the order counting tables are serialized in.
    std::strong_ordering operator<=>(const Partition& other) const;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// All partitions of n, each exactly once, in Partition's ordering
/// (decreasing length, then lexicographic). partitions_of(0) = { () }.
std::vector<Partition> partitions_of(int n);

/// The number of permutations of [n] with cycle type lambda:
/// n! / prod_i i^{m_i} m_i!.
Bigint z(const Partition& lambda);

/// Replaces one part j by j-1. Requires j >= 2 and m_j >= 1; throws
/// std::invalid_argument otherwise.
Partition down_shift(const Partition& lambda, int j);

/// Replaces one part i by i+1 (the inverse of down_shift(_, i+1)).
/// Requires i >= 1 and m_i >= 1.
Partition up_shift(const Partition& lambda, int i);

/// mu refines lambda by splitting one part into `arity` parts;
/// kappa counts the ways to merge `arity` labeled parts of mu back into
/// lambda.
struct RefinementEdge {
    Partition finer;    // mu
    Partition coarser;  // lambda
    int arity = 0;
    Bigint kappa;
};

/// Number of ways to pick `arity` labeled parts of mu whose merge yields
/// lambda: sum over qualifying sub-multisets S of prod_v C(m_v(mu), S_v).
/// Returns 0 when mu does not refine lambda this way.
Bigint merge_count(const Partition& mu, const Partition& lambda, int arity);

/// Every mu obtained from lambda by splitting one part into `arity`
/// parts, paired with merge_count(mu, lambda, arity) > 0. Edges come out
/// sorted by mu. The recurrences only ever split into an odd number of
/// parts, so even arity is rejected here; merge_count stays general.
std::vector<RefinementEdge> refinements_with_kappa(const Partition& lambda, int arity);

}  // namespace cyclefactor
