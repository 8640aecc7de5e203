#pragma once

#include "cyclefactor/partition.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclefactor {

/// A permutation of the ground set {1..n}, stored as its image map.
class Permutation {
public:
    Permutation() = default;

    /// Identity on [n].
    explicit Permutation(int n);

    /// images[x-1] = pi(x). Validates that the map is a bijection of {1..n}.
    static Permutation from_images(std::vector<int> images);

    /// Builds from disjoint cycles over [n]; elements absent from every
    /// cycle are fixed points.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    /// Accepts cycle notation "(1 2 3)(4 5)" or one-line image form
    /// "2 3 1 5 4". With n = 0 the ground set size is inferred from the
    /// largest element mentioned.
    static Permutation parse(std::string_view text, int n = 0);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x - 1]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;

    /// Disjoint cycles, each written starting at its minimum, sorted by
    /// minimum. Fixed points included.
    std::vector<std::vector<int>> cycles() const;
    int cycle_count() const;
    Partition cycle_type() const;
    bool is_single_cycle() const { return cycle_count() == 1; }
    int fixed_points() const;

    /// Positions x with x < pi(x) in the natural order.
    int exceedances() const;

    std::string to_cycle_string() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

/// Composite applying g first, then f: (f o g)(x) = f(g(x)).
Permutation compose(const Permutation& f, const Permutation& g);

/// Removes element x from a permutation on [n+1], splicing its cycle:
/// (... a x b ...) becomes (... a b ...). x must be the maximum element.
Permutation erase_element(const Permutation& p, int x);

/// Inserts x = n+1 into the cycle of `after`, immediately following it.
Permutation insert_element(const Permutation& p, int x, int after);

// --- enumeration ---------------------------------------------------------

/// (n-1)! as a machine word; the n-cycle stream size. Requires n <= 21.
std::uint64_t n_cycle_count(int n);

/// The rank-th n-cycle in the canonical order, as the left-to-right
/// sequence starting at 1. Rank order: lexicographic in the tail
/// (s_1,...,s_{n-1}) over {2..n}.
std::vector<int> n_cycle_sequence_at(int n, std::uint64_t rank);

namespace detail {
void advance_cycle_sequence(std::vector<int>& seq);
void images_from_cycle_sequence(const std::vector<int>& seq, std::vector<int>& img);
}  // namespace detail

/// Visits n-cycles with ranks in [lo, hi), in rank order. The callback
/// receives the image map (img[x-1] = image of x) in a buffer reused
/// between calls. Sub-ranges partition the stream exactly once, so
/// parallel consumers may split [0, (n-1)!) freely.
template <typename F>
void for_each_n_cycle_images(int n, std::uint64_t lo, std::uint64_t hi, F&& f) {
    if (lo >= hi) return;
    std::vector<int> seq = n_cycle_sequence_at(n, lo);
    std::vector<int> img(n);
    for (std::uint64_t r = lo; r < hi; ++r) {
        detail::images_from_cycle_sequence(seq, img);
        f(img);
        detail::advance_cycle_sequence(seq);
    }
}

template <typename F>
void for_each_n_cycle(int n, F&& f) {
    for_each_n_cycle_images(n, 0, n_cycle_count(n), [&](const std::vector<int>& img) {
        f(Permutation::from_images(img));
    });
}

/// Visits every permutation of cycle type lambda exactly once. The cycle
/// containing the smallest free element is fixed first, so the order is
/// deterministic.
template <typename F>
void for_each_by_type(const Partition& lambda, F&& f);

/// Visits all of S_n in lexicographic order of the image vector.
template <typename F>
void for_each_permutation(int n, F&& f);

std::vector<Permutation> enumerate_n_cycles(int n);
std::vector<Permutation> enumerate_by_type(const Partition& lambda);

// --- template bodies ------------------------------------------------------

namespace detail {

template <typename F>
struct TypeEnumerator {
    int n;
    std::vector<std::pair<int, int>> avail;  // (length, count remaining)
    std::vector<int> img;
    std::vector<bool> used;
    F& f;

    // Starts the cycle of the smallest free element; every permutation of
    // the type decomposes this way exactly once.
    void emit_cycles() {
        int start = 0;
        while (start < n && used[start]) ++start;
        if (start == n) {
            f(std::as_const(img));
            return;
        }
        used[start] = true;
        std::vector<int> cycle{start + 1};
        for (auto& [len, cnt] : avail) {
            if (cnt == 0) continue;
            --cnt;
            extend_cycle(cycle, len - 1);
            ++cnt;
        }
        used[start] = false;
    }

    void extend_cycle(std::vector<int>& cycle, int remaining) {
        if (remaining == 0) {
            // close the cycle; entries stay valid until the elements are freed
            for (size_t i = 0; i + 1 < cycle.size(); ++i) img[cycle[i] - 1] = cycle[i + 1];
            img[cycle.back() - 1] = cycle.front();
            emit_cycles();
            return;
        }
        for (int e = cycle.front() + 1; e <= n; ++e) {
            if (used[e - 1]) continue;
            used[e - 1] = true;
            cycle.push_back(e);
            extend_cycle(cycle, remaining - 1);
            cycle.pop_back();
            used[e - 1] = false;
        }
    }
};

}  // namespace detail

template <typename F>
void for_each_by_type(const Partition& lambda, F&& f) {
    const int n = lambda.n();
    detail::TypeEnumerator<F> e{n, {}, std::vector<int>(n), std::vector<bool>(n, false), f};
    for (int p : lambda.parts()) {
        if (!e.avail.empty() && e.avail.back().first == p) {
            ++e.avail.back().second;
        } else {
            e.avail.emplace_back(p, 1);
        }
    }
    e.emit_cycles();
}

template <typename F>
void for_each_permutation(int n, F&& f) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    do {
        f(std::as_const(img));
    } while (std::next_permutation(img.begin(), img.end()));
}

/// Cycle type of an image map, written into `parts` (sorted descending).
/// `seen` is scratch of size n reset on each call.
void cycle_type_of_images(const std::vector<int>& img, std::vector<char>& seen, std::vector<int>& parts);

}  // namespace cyclefactor
