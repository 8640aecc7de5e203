#pragma once

#include "cyclefactor/bigint.hpp"
#include "cyclefactor/partition.hpp"

#include <map>
#include <string>
#include <utility>

namespace cyclefactor {

enum class Source { oracle, recurrence };

const char* source_name(Source s);

/// Exact counts keyed by cycle type, for a fixed n. Tables carry an entry
/// for every partition of n (zeros included) so serializations always list
/// the full classification. Iteration order is Partition's ordering, which
/// keeps all output deterministic.
class CountTable {
public:
    CountTable(int n, Source source);

    int n() const { return n_; }
    Source source() const { return source_; }

    const Bigint& at(const Partition& type) const;
    void set(const Partition& type, Bigint value);
    void add(const Partition& type, const Bigint& delta);

    const std::map<Partition, Bigint>& entries() const { return entries_; }
    Bigint total() const;

    /// Entry-wise equality, ignoring the source tag.
    bool same_counts(const CountTable& other) const;

    /// {"n": ..., "source": "...", "entries": [{"type": [...], "count": "..."}, ...]}
    /// Counts are decimal strings so downstream JSON consumers cannot
    /// truncate them to doubles.
    std::string to_json() const;

    /// Columns: type (space-separated parts), length, count.
    std::string to_csv() const;

private:
    int n_;
    Source source_;
    std::map<Partition, Bigint> entries_;
};

/// Counts keyed by (diagonal cycle type, exceedance count) for a fixed
/// vertical type.
using ExceedanceProfile = std::map<std::pair<Partition, int>, Bigint>;

std::string profile_to_json(int n, const Partition& lambda, const ExceedanceProfile& profile);

}  // namespace cyclefactor
