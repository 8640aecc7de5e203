#pragma once

#include "cyclefactor/permutation.hpp"

#include <string>
#include <vector>

namespace cyclefactor {

/// A plane permutation: an n-cycle s given as its left-to-right sequence
/// (s_0 first), together with an arbitrary permutation pi on the same
/// ground set. s induces the linear order <_s by position; exceedance
/// statistics are read against that order.
class PlanePermutation {
public:
    /// s must list {1..n} exactly once. The usual normalization s_0 = 1 is
    /// not enforced; counting code that relies on it fixes s explicitly.
    PlanePermutation(std::vector<int> s, Permutation pi);

    /// s = (1, 2, ..., n).
    static PlanePermutation with_canonical_s(Permutation pi);

    int size() const { return static_cast<int>(s_.size()); }
    const std::vector<int>& upper() const { return s_; }
    const Permutation& vertical() const { return pi_; }

    /// s as a cyclic permutation: s_i -> s_{i+1 mod n}.
    Permutation s_cycle() const;

    /// The diagonal s o pi^{-1}. Satisfies D(pi(s_{i-1})) = s_i cyclically.
    Permutation diagonal() const;

    /// Position of x in s (0-based); the rank of x under <_s.
    int position(int x) const { return pos_[x - 1]; }
    bool less_s(int a, int b) const { return pos_[a - 1] < pos_[b - 1]; }

    /// Elements x with x <_s pi(x).
    int exceedance_count() const;

    /// Elements x with x >=_s pi(x); fixed points included.
    int anti_exceedance_count() const { return size() - exceedance_count(); }

    /// Anti-exceedances beyond the one each cycle of pi owns at the
    /// preimage of its <_s-minimum.
    int ntae_count() const { return anti_exceedance_count() - pi_.cycle_count(); }

    /// Debug rendering: s on top, pi(s_i) below.
    std::string to_two_row_string() const;

private:
    std::vector<int> s_;
    std::vector<int> pos_;  // pos_[x-1] = index of x in s_
    Permutation pi_;
};

}  // namespace cyclefactor
