#include "cyclefactor/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace cyclefactor {

Permutation::Permutation(int n) {
    if (n < 0) throw std::invalid_argument("permutation size must be >= 0");
    images_.resize(n);
    for (int i = 0; i < n; ++i) images_[i] = i + 1;
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(n, false);
    for (int v : images) {
        if (v < 1 || v > n || seen[v - 1]) {
            throw std::invalid_argument("image map is not a bijection of {1..n}");
        }
        seen[v - 1] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    if (n < 0) throw std::invalid_argument("permutation size must be >= 0");
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = i + 1;
    std::vector<bool> seen(n, false);
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i];
            int b = cyc[(i + 1) % cyc.size()];
            if (a < 1 || a > n) throw std::invalid_argument("cycle element outside [n]");
            if (seen[a - 1]) throw std::invalid_argument("element repeated across cycles");
            seen[a - 1] = true;
            images[a - 1] = b;
        }
    }
    return from_images(std::move(images));
}

Permutation Permutation::parse(std::string_view text, int n) {
    auto fail = [&] { throw std::invalid_argument("malformed permutation: '" + std::string(text) + "'"); };
    std::vector<std::vector<int>> cycles;
    std::vector<int> one_line;
    bool cycle_form = text.find('(') != std::string_view::npos;
    std::string buf(text);
    if (cycle_form) {
        std::istringstream in(buf);
        char c;
        int max_elem = 0;
        while (in >> c) {
            if (c != '(') fail();
            std::vector<int> cyc;
            int v;
            while (in >> v) {
                cyc.push_back(v);
                max_elem = std::max(max_elem, v);
            }
            in.clear();
            if (!(in >> c) || c != ')') fail();
            cycles.push_back(std::move(cyc));
        }
        if (n == 0) n = max_elem;
        return from_cycles(n, cycles);
    }
    std::istringstream in(buf);
    int v;
    while (in >> v) one_line.push_back(v);
    if (!in.eof()) fail();
    if (one_line.empty()) fail();
    if (n != 0 && n != static_cast<int>(one_line.size())) fail();
    return from_images(std::move(one_line));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int x = 1; x <= size(); ++x) inv[images_[x - 1] - 1] = x;
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int x = 1; x <= size(); ++x) {
        if (seen[x - 1]) continue;
        std::vector<int> cyc;
        int y = x;
        do {
            seen[y - 1] = true;
            cyc.push_back(y);
            y = images_[y - 1];
        } while (y != x);
        out.push_back(std::move(cyc));
    }
    return out;
}

int Permutation::cycle_count() const {
    int count = 0;
    std::vector<bool> seen(images_.size(), false);
    for (int x = 1; x <= size(); ++x) {
        if (seen[x - 1]) continue;
        ++count;
        int y = x;
        do {
            seen[y - 1] = true;
            y = images_[y - 1];
        } while (y != x);
    }
    return count;
}

Partition Permutation::cycle_type() const {
    std::vector<int> parts;
    std::vector<bool> seen(images_.size(), false);
    for (int x = 1; x <= size(); ++x) {
        if (seen[x - 1]) continue;
        int len = 0;
        int y = x;
        do {
            seen[y - 1] = true;
            ++len;
            y = images_[y - 1];
        } while (y != x);
        parts.push_back(len);
    }
    return Partition(std::move(parts));
}

int Permutation::fixed_points() const {
    int count = 0;
    for (int x = 1; x <= size(); ++x) {
        if (images_[x - 1] == x) ++count;
    }
    return count;
}

int Permutation::exceedances() const {
    int count = 0;
    for (int x = 1; x <= size(); ++x) {
        if (images_[x - 1] > x) ++count;
    }
    return count;
}

std::string Permutation::to_cycle_string() const {
    std::string out;
    for (const auto& cyc : cycles()) {
        out += '(';
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(cyc[i]);
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

Permutation compose(const Permutation& f, const Permutation& g) {
    if (f.size() != g.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> images(f.size());
    for (int x = 1; x <= f.size(); ++x) images[x - 1] = f(g(x));
    return Permutation::from_images(std::move(images));
}

Permutation erase_element(const Permutation& p, int x) {
    if (x != p.size() || x < 1) {
        throw std::invalid_argument("erase_element: x must be the maximum of the ground set");
    }
    const int n = p.size() - 1;
    std::vector<int> images(n);
    for (int y = 1; y <= n; ++y) images[y - 1] = (p(y) == x) ? p(x) : p(y);
    return Permutation::from_images(std::move(images));
}

Permutation insert_element(const Permutation& p, int x, int after) {
    if (x != p.size() + 1) {
        throw std::invalid_argument("insert_element: x must be n+1");
    }
    if (after < 1 || after > p.size()) {
        throw std::invalid_argument("insert_element: splice point outside [n]");
    }
    std::vector<int> images(p.size() + 1);
    for (int y = 1; y <= p.size(); ++y) images[y - 1] = p(y);
    images[x - 1] = p(after);
    images[after - 1] = x;
    return Permutation::from_images(std::move(images));
}

std::uint64_t n_cycle_count(int n) {
    if (n < 1) throw std::invalid_argument("n_cycle_count: n must be >= 1");
    if (n > 21) throw std::invalid_argument("n_cycle_count: (n-1)! overflows 64 bits");
    std::uint64_t f = 1;
    for (int i = 2; i <= n - 1; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::vector<int> n_cycle_sequence_at(int n, std::uint64_t rank) {
    if (rank >= n_cycle_count(n)) throw std::invalid_argument("n-cycle rank out of range");
    std::vector<int> pool;
    for (int v = 2; v <= n; ++v) pool.push_back(v);
    std::vector<int> seq{1};
    // factorial number system on the tail
    std::uint64_t radix = n_cycle_count(n);
    for (int slot = static_cast<int>(pool.size()); slot >= 1; --slot) {
        radix /= static_cast<std::uint64_t>(slot);
        auto idx = static_cast<size_t>(rank / radix);
        rank %= radix;
        seq.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return seq;
}

namespace detail {

void advance_cycle_sequence(std::vector<int>& seq) {
    std::next_permutation(seq.begin() + 1, seq.end());
}

void images_from_cycle_sequence(const std::vector<int>& seq, std::vector<int>& img) {
    const size_t n = seq.size();
    for (size_t i = 0; i < n; ++i) img[seq[i] - 1] = seq[(i + 1) % n];
}

}  // namespace detail

std::vector<Permutation> enumerate_n_cycles(int n) {
    std::vector<Permutation> out;
    out.reserve(n_cycle_count(n));
    for_each_n_cycle(n, [&](const Permutation& p) { out.push_back(p); });
    return out;
}

std::vector<Permutation> enumerate_by_type(const Partition& lambda) {
    std::vector<Permutation> out;
    for_each_by_type(lambda, [&](const std::vector<int>& img) {
        out.push_back(Permutation::from_images(img));
    });
    return out;
}

void cycle_type_of_images(const std::vector<int>& img, std::vector<char>& seen, std::vector<int>& parts) {
    const int n = static_cast<int>(img.size());
    seen.assign(n, 0);
    parts.clear();
    for (int x = 1; x <= n; ++x) {
        if (seen[x - 1]) continue;
        int len = 0;
        int y = x;
        do {
            seen[y - 1] = 1;
            ++len;
            y = img[y - 1];
        } while (y != x);
        parts.push_back(len);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
}

}  // namespace cyclefactor
