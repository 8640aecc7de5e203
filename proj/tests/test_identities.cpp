#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclefactor/identities.hpp"

#include <set>

using namespace cyclefactor;

TEST_CASE("identity registry") {
    const auto& names = identity_names();
    CHECK(names.size() == 11);
    CHECK(identity_envelope("theorem_main") == 11);
    CHECK(identity_envelope("base_recur") == 30);
    CHECK(identity_envelope("separation") == 8);
    CHECK_THROWS_AS(identity_envelope("nosuch"), std::invalid_argument);
    CHECK_THROWS_AS(run_identity("nosuch", 3), std::invalid_argument);
    CHECK_THROWS_AS(run_identity("theorem_main", 0), std::invalid_argument);
    CHECK_THROWS_AS(run_identity("gen_eq", 9), std::domain_error);
}

TEST_CASE("theorem_main sweep") {
    IdentityReport r3 = run_identity("theorem_main", 3);
    CHECK(r3.pass);
    CHECK(r3.cases_checked == 2);  // (4) and (2,1,1)

    IdentityReport r4 = run_identity("theorem_main", 4);
    CHECK(r4.pass);
    CHECK(r4.cases_checked == 3);  // (4,1), (3,2), (2,1,1,1)
    CHECK(r4.to_json() ==
          R"({"cases_checked":3,"failures":[],"identity":"theorem_main","n":4,"status":"pass"})");

    SUBCASE("oracle-backed variant") {
        IdentityOptions opts;
        opts.source = Source::oracle;
        for (int n = 1; n <= 6; ++n) CHECK(run_identity("theorem_main", n, opts).pass);
    }
}

TEST_CASE("report serialization is byte-stable") {
    IdentityReport a = run_identity("zagier_stanley", 5);
    IdentityReport b = run_identity("zagier_stanley", 5);
    CHECK(a.to_json() == b.to_json());
    IdentityOptions two_threads;
    two_threads.threads = 2;
    CHECK(run_identity("separation", 5).to_json() ==
          run_identity("separation", 5, two_threads).to_json());
}

TEST_CASE("every identity passes on a quick sweep") {
    for (const auto& name : identity_names()) {
        for (int n = 1; n <= 6; ++n) {
            IdentityReport r = run_identity(name, n);
            INFO(name, " n=", n, ": ", r.to_json());
            CHECK(r.pass);
            CHECK(r.cases_checked > 0);
        }
    }
}

TEST_CASE("gen_eq covers every (lambda, eta) pair") {
    IdentityReport r = run_identity("gen_eq", 3);
    CHECK(r.pass);
    CHECK(r.cases_checked == 9);
}

TEST_CASE("inverse_pairing counts the whole group") {
    CHECK(run_identity("inverse_pairing", 5).cases_checked == 120);
}

TEST_CASE("separation records the swept prefix length") {
    IdentityReport r = run_identity("separation", 4);
    CHECK(r.pass);
    CHECK(r.params.at("m_max") == "3");
    CHECK(r.cases_checked == 12);  // m in 1..3, k in 1..4
}

TEST_CASE("canonical permutation of a type") {
    CHECK(canonical_permutation_of_type(Partition({3, 2})) == Permutation::parse("(1 2 3)(4 5)"));
    CHECK(canonical_permutation_of_type(Partition({1, 1})) == Permutation(2));
}

TEST_CASE("merge_cycles") {
    Permutation p = Permutation::parse("(1 2)(3)(4 5 6)");
    // blocks by minimum: 1 2 | 3 | 4 5 6
    Permutation merged = merge_cycles(p, {0, 1, 2}, MergeOrder::by_min);
    CHECK(merged == Permutation::parse("(1 2 3 4 5 6)"));
    // by length first: 4 5 6 | 1 2 | 3
    Permutation by_len = merge_cycles(p, {0, 1, 2}, MergeOrder::by_length_then_min);
    CHECK(by_len == Permutation::parse("(4 5 6 1 2 3)"));
    CHECK(merge_cycles(p, {0, 2}, MergeOrder::by_min) ==
          Permutation::parse("(1 2 4 5 6)(3)", 6));
    CHECK_THROWS_AS(merge_cycles(p, {0}, MergeOrder::by_min), std::invalid_argument);
    CHECK_THROWS_AS(merge_cycles(p, {0, 7}, MergeOrder::by_min), std::invalid_argument);
}

TEST_CASE("key lemma set realization: worked example") {
    KeyLemmaSetsReport r = key_lemma_sets(Partition({4}), Partition({1, 1, 1}));
    CHECK(r.parts_merged == 3);
    REQUIRE(r.a_sizes.count(3) == 1);
    CHECK(r.a_sizes.at(3) == 3);
    CHECK(r.a_total == 3);
    CHECK(r.b_total == 3);
    CHECK(r.a_parts_disjoint);
    CHECK(r.b_parts_disjoint);
    CHECK(r.a_equals_b);
    CHECK(r.lhs_coefficient == 3);
    CHECK(r.rhs_coefficient == 3);
    CHECK(r.coefficients_match);
}

TEST_CASE("key lemma sets: preconditions") {
    CHECK_THROWS_AS(key_lemma_sets(Partition({4}), Partition({2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(key_lemma_sets(Partition({3, 1}), Partition({2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(key_lemma_sets(Partition({4}), Partition({2, 2})), std::invalid_argument);
}

TEST_CASE("merge convention fixture") {
    // The block order is pinned to increasing minima: under it the two
    // construction orders commute element-by-element. Sorting blocks by
    // length first keeps all the counts but breaks set equality, first at
    // lambda=(4), mu=(1,1,1).
    KeyLemmaSetsReport by_len =
        key_lemma_sets(Partition({4}), Partition({1, 1, 1}), MergeOrder::by_length_then_min);
    CHECK(by_len.coefficients_match);
    CHECK_FALSE(by_len.a_equals_b);

    int checked = 0;
    for (int n = 2; n <= 5; ++n) {
        for (const auto& lambda : partitions_of(n + 1)) {
            for (const auto& mu : partitions_of(n)) {
                int d = mu.length() - lambda.length();
                if (d <= 0 || d % 2 != 0) continue;
                KeyLemmaSetsReport r = key_lemma_sets(lambda, mu);
                INFO("lambda=(", lambda.to_string(), ") mu=(", mu.to_string(), ")");
                CHECK(r.a_equals_b);
                CHECK(r.coefficients_match);
                CHECK(r.a_parts_disjoint);
                CHECK(r.b_parts_disjoint);
                ++checked;
            }
        }
    }
    CHECK(checked > 0);
}
