#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "sl12/partitions.hpp"

using namespace sl12;

TEST_CASE("partitions_of enumerates all partitions largest-first") {
    CHECK(partitions_of(0) == std::vector<Partition>{{}});
    CHECK(partitions_of(4) ==
          std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});

    const long counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (long n = 0; n <= 8; ++n) {
        auto parts = partitions_of(n);
        CHECK(parts.size() == static_cast<std::size_t>(counts[n]));
        for (const auto& xi : parts) {
            CHECK(is_partition(xi));
            CHECK(partition_weight(xi) == n);
        }
    }
}

TEST_CASE("remove_box decrements one part and keeps a partition") {
    CHECK(remove_box({2}, 0) == Partition{1});
    CHECK(remove_box({1}, 0) == Partition{});
    CHECK(remove_box({2, 2}, 0) == Partition{2, 1});
    CHECK(remove_box({2, 2}, 1) == Partition{2, 1});
    CHECK(remove_box({3, 2}, 0) == Partition{2, 2});
    CHECK(remove_box({2, 1}, 0) == Partition{1, 1});
    CHECK(remove_box({2, 1}, 1) == Partition{2});
    CHECK(remove_box({1, 1, 1}, 0) == Partition{1, 1});
    CHECK(remove_box({3, 3, 1}, 1) == Partition{3, 2, 1});
    CHECK_THROWS(remove_box({2, 1}, 2));
    CHECK_THROWS(remove_box({2, 1}, -1));

    for (long n = 1; n <= 6; ++n) {
        for (const auto& xi : partitions_of(n)) {
            for (int c = 0; c < static_cast<int>(xi.size()); ++c) {
                Partition red = remove_box(xi, c);
                CHECK(is_partition(red));
                CHECK(partition_weight(red) == n - 1);
            }
        }
    }
}

TEST_CASE("removal pairs of (2) and the two-round results") {
    auto pairs = removal_pairs({2});
    REQUIRE(pairs.size() == 4);
    CHECK(pairs[0] == RemovalPair{{}, {}});
    CHECK(pairs[1] == RemovalPair{{0}, {}});
    CHECK(pairs[2] == RemovalPair{{}, {0}});
    CHECK(pairs[3] == RemovalPair{{0}, {0}});
    CHECK(removal_result({2}, pairs[0]) == Partition{2});
    CHECK(removal_result({2}, pairs[1]) == Partition{1});
    CHECK(removal_result({2}, pairs[2]) == Partition{1});
    CHECK(removal_result({2}, pairs[3]) == Partition{});

    // pairs are distinct, and the second round always fits the reduced shape
    for (long n = 0; n <= 6; ++n) {
        for (const auto& xi : partitions_of(n)) {
            auto ps = removal_pairs(xi);
            std::set<RemovalPair> uniq(ps.begin(), ps.end());
            CHECK(uniq.size() == ps.size());
            for (const auto& bc : ps) CHECK(is_partition(removal_result(xi, bc)));
        }
    }
}

TEST_CASE("removal dimension sum equals the Kac dimension product") {
    CHECK(removal_dimension_sum({}) == Int(1));
    CHECK(removal_dimension_sum({2}) == Int(8));
    CHECK(removal_dimension_sum({1, 1}) == Int(16));
    CHECK(removal_dimension_sum({2, 1}) == Int(32));
    CHECK(removal_dimension_sum({2, 2}) == Int(64));
    CHECK(removal_dimension_sum({3, 3}) == Int(144));

    for (long n = 0; n <= 8; ++n)
        for (const auto& xi : partitions_of(n))
            CHECK(removal_dimension_sum(xi) == kac_dimension_product(xi));
}

TEST_CASE("removal pairs factor through a strict descent") {
    CHECK(removal_split_check({3, 2}, 1));
    CHECK(removal_split_check({2, 1, 1}, 1));
    CHECK(removal_split_check({3, 2, 2, 1}, 3));
    CHECK_THROWS(removal_split_check({2, 2}, 1));
    CHECK_THROWS(removal_split_check({3, 2}, 0));

    for (long n = 2; n <= 7; ++n) {
        for (const auto& xi : partitions_of(n)) {
            for (int t = 1; t < static_cast<int>(xi.size()); ++t) {
                if (xi[t - 1] > xi[t]) CHECK(removal_split_check(xi, t));
            }
        }
    }
}

TEST_CASE("weyl monomial pool has 4^n descriptors") {
    auto pool1 = weyl_monomial_pool(1);
    REQUIRE(pool1.size() == 4);
    CHECK(pool1[0] == WeylMonomial{{}, {}, {}});
    CHECK(pool1[1] == WeylMonomial{{0}, {}, {}});
    CHECK(pool1[2] == WeylMonomial{{}, {0}, {}});
    CHECK(pool1[3] == WeylMonomial{{}, {}, {0}});

    for (long n = 0; n <= 6; ++n) {
        auto pool = weyl_monomial_pool(n);
        CHECK(Int(static_cast<long>(pool.size())) == kac_dimension_product(Partition(n, 1)));

        using Key = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;
        std::set<Key> uniq;
        for (const auto& m : pool) {
            uniq.insert({m.a, m.b, m.c});
            CHECK(std::is_sorted(m.a.begin(), m.a.end()));
            for (std::size_t i = 1; i < m.b.size(); ++i) CHECK(m.b[i - 1] < m.b[i]);
            for (std::size_t i = 1; i < m.c.size(); ++i) CHECK(m.c[i - 1] < m.c[i]);
        }
        CHECK(uniq.size() == pool.size());
    }
}

TEST_CASE("y2 exponent tuples count prod (mu_j + 1)") {
    CHECK(y2_exponent_tuples({}).size() == 1);
    CHECK(y2_exponent_tuples({2}).size() == 3);
    CHECK(y2_exponent_tuples({2, 1}).size() == 6);

    auto t11 = y2_exponent_tuples({1, 1});
    std::set<std::vector<long>> got(t11.begin(), t11.end());
    std::set<std::vector<long>> want = {{0, 0}, {1, 0}, {2, 0}, {0, 1}};
    CHECK(got == want);

    for (long n = 0; n <= 8; ++n) {
        for (const auto& mu : partitions_of(n)) {
            long expect = 1;
            for (long part : mu) expect *= part + 1;
            CHECK(y2_exponent_tuples(mu).size() == static_cast<std::size_t>(expect));
        }
    }
}

TEST_CASE("cv basis monomials count 4^{parts} * prod xi_j") {
    CHECK(cv_basis_monomials({1}).size() == 4);
    CHECK(cv_basis_monomials({2}).size() == 8);
    CHECK(cv_basis_monomials({1, 1}).size() == 16);
    CHECK(cv_basis_monomials({2, 1}).size() == 32);

    for (long n = 0; n <= 6; ++n)
        for (const auto& xi : partitions_of(n))
            CHECK(Int(static_cast<long>(cv_basis_monomials(xi).size())) ==
                  kac_dimension_product(xi));
}

TEST_CASE("demazure partitions") {
    CHECK(demazure_partition(1, 3) == Partition{1, 1, 1});
    CHECK(demazure_partition(2, 5) == Partition{2, 2, 1});
    CHECK(demazure_partition(3, 3) == Partition{3});
    CHECK(demazure_partition(2, 4) == Partition{2, 2});
    CHECK(demazure_partition(3, 7) == Partition{3, 3, 1});
    CHECK(demazure_partition(2, 0) == Partition{});
    CHECK_THROWS(demazure_partition(0, 3));

    for (long ell = 1; ell <= 4; ++ell) {
        for (long l2 = 0; l2 <= 8; ++l2) {
            Partition xi = demazure_partition(ell, l2);
            CHECK(is_partition(xi));
            CHECK(partition_weight(xi) == l2);
            for (std::size_t i = 0; i + 1 < xi.size(); ++i) CHECK(xi[i] == ell);
            if (!xi.empty()) CHECK(xi.back() <= ell);
        }
    }
}

TEST_CASE("truncated partitions") {
    CHECK(truncated_partition(2, 5) == Partition{3, 2});
    CHECK(truncated_partition(4, 2) == Partition{1, 1});
    CHECK(truncated_partition(3, 3) == Partition{1, 1, 1});
    CHECK(truncated_partition(2, 6) == Partition{3, 3});
    CHECK(truncated_partition(3, 7) == Partition{3, 2, 2});
    CHECK(truncated_partition(1, 5) == Partition{5});
    CHECK(truncated_partition(3, 0) == Partition{});
    CHECK_THROWS(truncated_partition(0, 3));

    for (long N = 1; N <= 5; ++N) {
        for (long l2 = 0; l2 <= 8; ++l2) {
            Partition xi = truncated_partition(N, l2);
            CHECK(is_partition(xi));
            CHECK(partition_weight(xi) == l2);
            CHECK(xi.size() <= static_cast<std::size_t>(N));
            if (N >= l2) CHECK(xi == Partition(l2, 1));
        }
    }
}
