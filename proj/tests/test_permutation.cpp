#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclefactor/permutation.hpp"

#include <numeric>
#include <random>
#include <set>

using namespace cyclefactor;

namespace {

Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation::from_images(std::move(img));
}

}  // namespace

TEST_CASE("construction and validation") {
    CHECK(Permutation(3) == Permutation::from_images({1, 2, 3}));
    CHECK_THROWS_AS(Permutation::from_images({1, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_images({0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_images({1, 2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 2}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("parsing") {
    Permutation p = Permutation::parse("(1 2 3)(4 5)");
    CHECK(p.size() == 5);
    CHECK(p(1) == 2);
    CHECK(p(3) == 1);
    CHECK(p(4) == 5);
    CHECK(p.to_cycle_string() == "(1 2 3)(4 5)");

    CHECK(Permutation::parse("2 3 1 5 4") == p);
    CHECK(Permutation::parse("(1 2)", 3) == Permutation::from_cycles(3, {{1, 2}}));
    CHECK_THROWS_AS(Permutation::parse("(1 2"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("2 2 1"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse(""), std::invalid_argument);
}

TEST_CASE("compose applies the right factor first") {
    Permutation c123 = Permutation::parse("(1 2 3)");
    Permutation c132 = Permutation::parse("(1 3 2)");
    CHECK(compose(c123, c132) == Permutation(3));
    CHECK(compose(c123, c123) == c132);
    Permutation g = Permutation::parse("(1 3)", 4);
    CHECK(compose(Permutation(4), g) == g);
    CHECK(compose(g, Permutation(4)) == g);
    CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)), std::invalid_argument);
}

TEST_CASE("cycle structure") {
    CHECK(Permutation(4).cycle_type() == Partition({1, 1, 1, 1}));
    CHECK(Permutation::parse("(1 2)", 3).cycle_type() == Partition({2, 1}));
    CHECK(Permutation::parse("(1 2 3)(4 5)").cycle_type() == Partition({3, 2}));
    CHECK(Permutation::parse("(1 2 3)(4 5)").cycle_count() == 2);
    CHECK(Permutation::parse("(1 2 3)").is_single_cycle());
    CHECK(!Permutation(3).is_single_cycle());
    CHECK(Permutation::parse("(1 2)", 4).fixed_points() == 2);
}

TEST_CASE("inverse and conjugation properties") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        Permutation p = random_permutation(n, rng);
        CHECK(compose(p, p.inverse()) == Permutation(n));
        CHECK(compose(p.inverse(), p) == Permutation(n));
        if (n <= 10) {
            Permutation q = random_permutation(n, rng);
            Permutation conj = compose(q, compose(p, q.inverse()));
            CHECK(conj.cycle_type() == p.cycle_type());
        }
    }
}

TEST_CASE("n-cycle enumeration") {
    CHECK(enumerate_n_cycles(1).size() == 1);
    CHECK(enumerate_n_cycles(1)[0] == Permutation(1));

    auto threes = enumerate_n_cycles(3);
    REQUIRE(threes.size() == 2);
    CHECK(threes[0] == Permutation::parse("(1 2 3)"));
    CHECK(threes[1] == Permutation::parse("(1 3 2)"));

    CHECK(enumerate_n_cycles(4).size() == 6);

    SUBCASE("all distinct single cycles, count (n-1)!") {
        for (int n = 1; n <= 7; ++n) {
            auto cycles = enumerate_n_cycles(n);
            CHECK(cycles.size() == n_cycle_count(n));
            std::set<Permutation> uniq(cycles.begin(), cycles.end());
            CHECK(uniq.size() == cycles.size());
            for (const auto& c : cycles) CHECK(c.is_single_cycle());
        }
    }
    SUBCASE("rank access matches iteration order") {
        for (int n = 2; n <= 6; ++n) {
            auto all = enumerate_n_cycles(n);
            for (std::uint64_t r = 0; r < all.size(); ++r) {
                auto seq = n_cycle_sequence_at(n, r);
                std::vector<int> img(n);
                detail::images_from_cycle_sequence(seq, img);
                CHECK(Permutation::from_images(img) == all[r]);
            }
        }
    }
    SUBCASE("sub-ranges partition the stream exactly once") {
        const int n = 6;
        const std::uint64_t total = n_cycle_count(n);
        std::vector<Permutation> stitched;
        for (auto [lo, hi] : {std::pair<std::uint64_t, std::uint64_t>{0, 17},
                              {17, 80},
                              {80, total}}) {
            for_each_n_cycle_images(n, lo, hi, [&](const std::vector<int>& img) {
                stitched.push_back(Permutation::from_images(img));
            });
        }
        CHECK(stitched == enumerate_n_cycles(n));
    }
}

TEST_CASE("enumeration by cycle type") {
    CHECK(enumerate_by_type(Partition({1, 1, 1})) == std::vector<Permutation>{Permutation(3)});
    CHECK(enumerate_by_type(Partition({3})).size() == 2);
    CHECK(enumerate_by_type(Partition({2, 1})).size() == 3);

    SUBCASE("exactly z(lambda) distinct permutations of the right type") {
        for (int n = 1; n <= 8; ++n) {
            for (const auto& lambda : partitions_of(n)) {
                std::set<Permutation> seen;
                for_each_by_type(lambda, [&](const std::vector<int>& img) {
                    auto p = Permutation::from_images(img);
                    CHECK(p.cycle_type() == lambda);
                    seen.insert(std::move(p));
                });
                CHECK(Bigint(seen.size()) == z(lambda));
            }
        }
    }
}

TEST_CASE("erase and insert surgeries") {
    CHECK(erase_element(Permutation::parse("(1 2 4 3)"), 4) == Permutation::parse("(1 2 3)"));
    CHECK(erase_element(Permutation::parse("(1 2 3)", 4), 4) == Permutation::parse("(1 2 3)"));
    CHECK(erase_element(Permutation(4), 4) == Permutation(3));
    CHECK_THROWS_AS(erase_element(Permutation(4), 3), std::invalid_argument);

    CHECK(insert_element(Permutation::parse("(1 2 3)"), 4, 2) == Permutation::parse("(1 2 4 3)"));
    CHECK(insert_element(Permutation(3), 4, 1) == Permutation::parse("(1 4)", 4));
    CHECK_THROWS_AS(insert_element(Permutation(3), 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(insert_element(Permutation(3), 5, 1), std::invalid_argument);

    SUBCASE("mutually inverse wherever defined") {
        for (int n = 1; n <= 5; ++n) {
            for_each_permutation(n, [&](const std::vector<int>& img) {
                Permutation p = Permutation::from_images(img);
                for (int a = 1; a <= n; ++a) {
                    Permutation grown = insert_element(p, n + 1, a);
                    CHECK(grown.size() == n + 1);
                    CHECK(erase_element(grown, n + 1) == p);
                }
            });
        }
    }
    SUBCASE("a length-i cycle admits i distinct insertions") {
        Permutation p = Permutation::parse("(1 2 3)(4 5)");
        std::set<Permutation> results;
        for (int a : {1, 2, 3}) results.insert(insert_element(p, 6, a));
        CHECK(results.size() == 3);
        for (const auto& q : results) CHECK(q.cycle_type() == Partition({4, 2}));
    }
}
