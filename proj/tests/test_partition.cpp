#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclefactor/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

using namespace cyclefactor;

namespace {

// Reference partition counts via the pentagonal-number recurrence,
// independent of the enumerator under test.
std::vector<Bigint> partition_counts(int n_max) {
    std::vector<Bigint> p(static_cast<size_t>(n_max) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            Bigint sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= n) p[n] += sign * p[n - g1];
            if (g2 <= n) p[n] += sign * p[n - g2];
        }
    }
    return p;
}

// Cycle-type census of S_n by direct enumeration, independent of the
// permutation module.
std::map<std::vector<int>, long> type_census(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::map<std::vector<int>, long> census;
    do {
        std::vector<bool> seen(n, false);
        std::vector<int> type;
        for (int x = 1; x <= n; ++x) {
            if (seen[x - 1]) continue;
            int len = 0, y = x;
            do {
                seen[y - 1] = true;
                ++len;
                y = img[y - 1];
            } while (y != x);
            type.push_back(len);
        }
        std::sort(type.rbegin(), type.rend());
        ++census[type];
    } while (std::next_permutation(img.begin(), img.end()));
    return census;
}

// kappa by brute force over labeled part subsets.
Bigint kappa_labeled(const Partition& mu, const Partition& lambda, int arity) {
    const auto& parts = mu.parts();
    const int count = mu.length();
    Bigint total = 0;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(pick.size()) == arity) {
            std::vector<int> rest;
            int sum = 0;
            size_t pi = 0;
            for (int i = 0; i < count; ++i) {
                if (pi < pick.size() && pick[pi] == i) {
                    sum += parts[i];
                    ++pi;
                } else {
                    rest.push_back(parts[i]);
                }
            }
            rest.push_back(sum);
            if (Partition(rest) == lambda) ++total;
            return;
        }
        for (int i = from; i < count; ++i) {
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return total;
}

}  // namespace

TEST_CASE("parsing both text forms") {
    CHECK(Partition::parse("3,2,1").parts() == std::vector<int>{3, 2, 1});
    CHECK(Partition::parse("3,2,1").n() == 6);
    CHECK(Partition::parse("1^2 2^2").parts() == std::vector<int>{2, 2, 1, 1});
    CHECK(Partition::parse("1^2 2^2").n() == 6);
    CHECK(Partition::parse("1^2 2^1") == Partition::parse("2,1,1"));
    CHECK(Partition::parse(" 5 ").parts() == std::vector<int>{5});
    CHECK(Partition::parse("2^0 3^1").parts() == std::vector<int>{3});
}

TEST_CASE("parse rejects malformed text") {
    CHECK_THROWS_AS(Partition::parse("2,0"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("-1,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("3,,1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a,b"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2^"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("^2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("0^3"), std::invalid_argument);
    CHECK_THROWS_AS(Partition(std::vector<int>{2, 0}), std::invalid_argument);
}

TEST_CASE("canonical form and accessors") {
    Partition p({1, 3, 2, 3});
    CHECK(p.parts() == std::vector<int>{3, 3, 2, 1});
    CHECK(p.n() == 9);
    CHECK(p.length() == 4);
    CHECK(p.multiplicity(3) == 2);
    CHECK(p.multiplicity(2) == 1);
    CHECK(p.multiplicity(5) == 0);
    CHECK(p.max_part() == 3);
    CHECK(p.to_string() == "3,3,2,1");
    CHECK(Partition().n() == 0);
    CHECK(Partition().to_string() == "-");
}

TEST_CASE("partitions_of: counts and order") {
    auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == Partition({1, 1, 1}));
    CHECK(p3[1] == Partition({2, 1}));
    CHECK(p3[2] == Partition({3}));

    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0] == Partition());
    CHECK(partitions_of(7).size() == 15);

    // order: decreasing length, then lexicographic
    auto p4 = partitions_of(4);
    std::vector<Partition> expected = {Partition({1, 1, 1, 1}), Partition({2, 1, 1}),
                                       Partition({2, 2}), Partition({3, 1}), Partition({4})};
    CHECK(p4 == expected);

    SUBCASE("sizes match the pentagonal recurrence") {
        auto counts = partition_counts(25);
        for (int n = 0; n <= 25; ++n) {
            CHECK(Bigint(partitions_of(n).size()) == counts[static_cast<size_t>(n)]);
        }
    }
    SUBCASE("no duplicates, all sum to n") {
        for (int n = 0; n <= 12; ++n) {
            auto ps = partitions_of(n);
            std::set<Partition> uniq(ps.begin(), ps.end());
            CHECK(uniq.size() == ps.size());
            for (const auto& p : ps) CHECK(p.n() == n);
        }
    }
}

TEST_CASE("z: conjugacy class sizes") {
    CHECK(z(Partition({1, 1, 1, 1})) == 1);
    CHECK(z(Partition({3})) == 2);
    CHECK(z(Partition({2, 1})) == 3);
    CHECK(z(Partition()) == 1);

    SUBCASE("matches a direct census of S_n") {
        for (int n = 1; n <= 6; ++n) {
            auto census = type_census(n);
            for (const auto& lambda : partitions_of(n)) {
                auto it = census.find(lambda.parts());
                REQUIRE(it != census.end());
                CHECK(z(lambda) == it->second);
            }
        }
    }
    SUBCASE("class sizes sum to n!") {
        for (int n = 0; n <= 12; ++n) {
            Bigint sum = 0;
            for (const auto& lambda : partitions_of(n)) sum += z(lambda);
            CHECK(sum == factorial(n));
        }
    }
}

TEST_CASE("down_shift") {
    CHECK(down_shift(Partition({4}), 4) == Partition({3}));
    CHECK(down_shift(Partition({3, 1}), 3) == Partition({2, 1}));
    CHECK_THROWS_AS(down_shift(Partition({3, 1}), 2), std::invalid_argument);
    CHECK_THROWS_AS(down_shift(Partition({3, 1}), 1), std::invalid_argument);

    SUBCASE("round trip with up_shift") {
        for (int n = 1; n <= 8; ++n) {
            for (const auto& lambda : partitions_of(n)) {
                for (int j = 2; j <= lambda.max_part(); ++j) {
                    if (lambda.multiplicity(j) == 0) continue;
                    Partition down = down_shift(lambda, j);
                    CHECK(down.n() == n - 1);
                    CHECK(down.length() == lambda.length());
                    CHECK(up_shift(down, j - 1) == lambda);
                }
            }
        }
    }
}

TEST_CASE("merge_count matches the worked kappa example") {
    // mu = 1^2 2^2, lambda = 1 2 3, merging two labeled parts: 4 ways
    CHECK(merge_count(Partition::parse("1^2 2^2"), Partition({3, 2, 1}), 2) == 4);
    CHECK(merge_count(Partition({1, 1, 1}), Partition({3}), 3) == 1);
    CHECK(merge_count(Partition({1, 1, 1, 1}), Partition({3, 1}), 3) == 4);
    // not a refinement
    CHECK(merge_count(Partition({2, 2}), Partition({3, 1}), 2) == 0);
}

TEST_CASE("refinements_with_kappa") {
    SUBCASE("single edges") {
        auto edges = refinements_with_kappa(Partition({3}), 3);
        REQUIRE(edges.size() == 1);
        CHECK(edges[0].finer == Partition({1, 1, 1}));
        CHECK(edges[0].kappa == 1);

        edges = refinements_with_kappa(Partition({3, 1}), 3);
        REQUIRE(edges.size() == 1);
        CHECK(edges[0].finer == Partition({1, 1, 1, 1}));
        CHECK(edges[0].kappa == 4);
    }
    SUBCASE("even arity rejected") {
        CHECK_THROWS_AS(refinements_with_kappa(Partition({4}), 2), std::invalid_argument);
        CHECK_THROWS_AS(refinements_with_kappa(Partition({4}), 1), std::invalid_argument);
    }
    SUBCASE("edges agree with the labeled brute force and cover every refinement") {
        for (int n = 1; n <= 10; ++n) {
            for (const auto& lambda : partitions_of(n)) {
                for (int arity = 3; arity <= n; arity += 2) {
                    auto edges = refinements_with_kappa(lambda, arity);
                    std::set<Partition> emitted;
                    for (const auto& e : edges) {
                        CHECK(e.kappa >= 1);
                        CHECK(e.arity == arity);
                        CHECK(e.finer.length() == lambda.length() + arity - 1);
                        CHECK(e.kappa == kappa_labeled(e.finer, lambda, arity));
                        emitted.insert(e.finer);
                    }
                    CHECK(emitted.size() == edges.size());
                    // completeness: any mu with positive labeled count is emitted
                    for (const auto& mu : partitions_of(n)) {
                        if (mu.length() != lambda.length() + arity - 1) continue;
                        if (kappa_labeled(mu, lambda, arity) > 0) CHECK(emitted.count(mu) == 1);
                    }
                }
            }
        }
    }
}

TEST_CASE("ordering is decreasing length then lexicographic") {
    CHECK(Partition({1, 1, 1}) < Partition({2, 1}));
    CHECK(Partition({2, 2}) < Partition({3, 1}));
    CHECK(Partition({3, 1}) < Partition({4}));
    CHECK(!(Partition({3}) < Partition({3})));
}
