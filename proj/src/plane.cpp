#include "cyclefactor/plane.hpp"

#include <stdexcept>

namespace cyclefactor {

PlanePermutation::PlanePermutation(std::vector<int> s, Permutation pi)
    : s_(std::move(s)), pi_(std::move(pi)) {
    const int n = static_cast<int>(s_.size());
    if (pi_.size() != n) throw std::invalid_argument("plane permutation: size mismatch");
    pos_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = s_[i];
        if (v < 1 || v > n || pos_[v - 1] != -1) {
            throw std::invalid_argument("upper horizontal is not a permutation sequence of {1..n}");
        }
        pos_[v - 1] = i;
    }
}

PlanePermutation PlanePermutation::with_canonical_s(Permutation pi) {
    std::vector<int> s(pi.size());
    for (int i = 0; i < pi.size(); ++i) s[i] = i + 1;
    return PlanePermutation(std::move(s), std::move(pi));
}

Permutation PlanePermutation::s_cycle() const {
    const int n = size();
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[s_[i] - 1] = s_[(i + 1) % n];
    return Permutation::from_images(std::move(img));
}

Permutation PlanePermutation::diagonal() const {
    return compose(s_cycle(), pi_.inverse());
}

int PlanePermutation::exceedance_count() const {
    int count = 0;
    for (int x = 1; x <= size(); ++x) {
        if (pos_[x - 1] < pos_[pi_(x) - 1]) ++count;
    }
    return count;
}

std::string PlanePermutation::to_two_row_string() const {
    std::string top, bottom;
    for (int i = 0; i < size(); ++i) {
        if (i) {
            top += ' ';
            bottom += ' ';
        }
        std::string a = std::to_string(s_[i]);
        std::string b = std::to_string(pi_(s_[i]));
        while (a.size() < b.size()) a.insert(a.begin(), ' ');
        while (b.size() < a.size()) b.insert(b.begin(), ' ');
        top += a;
        bottom += b;
    }
    return top + "\n" + bottom;
}

}  // namespace cyclefactor
