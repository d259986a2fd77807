#include <doctest.h>

#include <random>

#include "jacobiq/disc.hpp"
#include "jacobiq/lattice.hpp"
#include "jacobiq/rational.hpp"
#include "../support/oracles.hpp"

using namespace jacobiq;

TEST_SUITE("properties") {

TEST_CASE("snf factors random integer matrices with a divisibility chain") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> entry(-20, 20);
    std::uniform_int_distribution<std::size_t> size(1, 5);
    for (int t = 0; t < 1000; ++t) {
        std::size_t n = size(rng);
        RationalMatrix A(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) A(i, j) = entry(rng);
        SnfResult s = snf(A);
        REQUIRE(s.U * s.D * s.V == A);
        REQUIRE(abs(s.U.det()) == 1);
        REQUIRE(abs(s.V.det()) == 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) REQUIRE(s.D(i, j) == 0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            Int a = s.D(i, i).get_num(), b = s.D(i + 1, i + 1).get_num();
            REQUIRE(a >= 0);
            if (a == 0) REQUIRE(b == 0);
            else REQUIRE(b % a == 0);
        }
    }
}

TEST_CASE("adjugate identity on random symmetric rational matrices") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    for (int t = 0; t < 200; ++t) {
        std::size_t n = 1 + t % 4;
        RationalMatrix M(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) M(i, j) = M(j, i) = ratio(num(rng), den(rng));
        REQUIRE(M * adjugate(M) == M.det() * RationalMatrix::identity(n));
        REQUIRE(M.det() == oracle::det_cofactor(M));
    }
}

TEST_CASE("positive definiteness agrees with a box scan") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> num(-6, 6);
    for (int t = 0; t < 300; ++t) {
        std::size_t n = 2 + t % 2;
        RationalMatrix M(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) M(i, j) = M(j, i) = ratio(num(rng), 2);
        bool pd = is_positive_definite(M);
        bool scan = true;
        oracle::box(n, 3, [&](const std::vector<long>& x) {
            if (std::all_of(x.begin(), x.end(), [](long a) { return a == 0; })) return;
            if (gram_eval(M, oracle::to_rv(x)) <= 0) scan = false;
        });
        // the scan is only a necessary condition
        if (pd) REQUIRE(scan);
        if (!scan) REQUIRE_FALSE(pd);
        bool minors = true;
        for (std::size_t k = 1; k <= n; ++k)
            if (oracle::det_cofactor(M.block(0, 0, k, k)) <= 0) minors = false;
        REQUIRE(pd == minors);
    }
}

TEST_CASE("disc order of a 1x1 index a/b is a*b") {
    for (long a = 1; a <= 12; ++a)
        for (long b = 1; b <= 6; ++b) {
            Rat q = ratio(a, b);
            DiscGroup G = disc_group(RationalMatrix{{q}});
            REQUIRE(G.order == q.get_num() * q.get_den());
            REQUIRE(G.reps.size() == G.order.get_ui());
        }
}

TEST_CASE("the sign of a coset offset does not change its distance to the lattice") {
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<long> num(-12, 12);
    for (int t = 0; t < 100; ++t) {
        RationalMatrix M = oracle::random_admissible(rng, 1 + t % 3, 4);
        std::size_t n = M.rows();
        RatVec xi(n);
        for (auto& x : xi) x = ratio(num(rng), 6);
        Rat a, b;
        closest_vectors(M, xi, &a);
        closest_vectors(M, -xi, &b);
        REQUIRE(a == b);
    }
}

TEST_CASE("reduced Gram matrices satisfy the off-diagonal bound") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        RationalMatrix M = oracle::random_admissible(rng, 1 + t % 4, 4);
        RationalMatrix g = minkowski_reduce(M).gram;
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.rows(); ++j)
                if (i != j) REQUIRE(2 * abs(g(i, j)) <= std::min(g(i, i), g(j, j)));
        for (std::size_t i = 0; i + 1 < g.rows(); ++i) REQUIRE(g(i, i) <= g(i + 1, i + 1));
        REQUIRE(rd(g) <= rd_upper_bound(g));
    }
}

}  // TEST_SUITE
