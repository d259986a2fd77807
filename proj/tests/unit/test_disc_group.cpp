#include <doctest.h>

#include "jacobiq/disc.hpp"
#include "../support/oracles.hpp"

using namespace jacobiq;

namespace {

void check_split_against_oracle(const RationalMatrix& M) {
    IndexSplit s = split_index(M);
    RationalMatrix I = RationalMatrix::identity(M.rows());
    CHECK(oracle::same_lattice(s.M_Z, oracle::lattice_intersection(M, I)));
    CHECK(oracle::same_lattice(s.M_frac, oracle::lattice_sum(M, I)));
    CHECK(s.M_Z.is_integral());
}

}  // namespace

TEST_SUITE("disc_group") {

TEST_CASE("split of the identity") {
    IndexSplit s = split_index(RationalMatrix::identity(2));
    CHECK(oracle::same_lattice(s.M_Z, RationalMatrix::identity(2)));
    CHECK(oracle::same_lattice(s.M_frac, RationalMatrix::identity(2)));
}

TEST_CASE("split of (3/2)") {
    IndexSplit s = split_index(RationalMatrix{{Rat(3, 2)}});
    CHECK(abs(s.M_Z(0, 0)) == 3);
    CHECK(abs(s.M_frac(0, 0)) == Rat(1, 2));
    check_split_against_oracle(RationalMatrix{{Rat(3, 2)}});
}

TEST_CASE("split of diag(1/2, 2)") {
    RationalMatrix M = RationalMatrix::diagonal({Rat(1, 2), Rat(2)});
    IndexSplit s = split_index(M);
    CHECK(oracle::same_lattice(s.M_Z, RationalMatrix::diagonal({Rat(1), Rat(2)})));
    CHECK(oracle::same_lattice(s.M_frac, RationalMatrix::diagonal({Rat(1, 2), Rat(1)})));
    check_split_against_oracle(M);
}

TEST_CASE("split of a non-diagonal index") { check_split_against_oracle(RationalMatrix{{Rat(4, 3), Rat(1, 2)}, {Rat(1, 2), 2}}); }

TEST_CASE("split rejects asymmetric input") {
    try {
        split_index(RationalMatrix{{1, 2}, {3, 4}});
        FAIL("no exception");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonSymmetric);
    }
}

TEST_CASE("admissibility") {
    CHECK(is_admissible_index(RationalMatrix{{2}}));
    CHECK_FALSE(is_admissible_index(RationalMatrix{{3}}));
    CHECK(is_admissible_index(RationalMatrix{{Rat(3, 2)}}));
    CHECK_FALSE(is_admissible_index(RationalMatrix::identity(2)));
    CHECK(is_admissible_index(RationalMatrix{{2, 1}, {1, 2}}));
    for (const auto& M : {RationalMatrix{{2}}, RationalMatrix{{3}}, RationalMatrix{{Rat(3, 2)}},
                          RationalMatrix::diagonal({Rat(1, 2), Rat(2)}), RationalMatrix{{Rat(2, 3), Rat(1, 3)}, {Rat(1, 3), 2}}})
        CHECK(is_admissible_index(M) == oracle::admissible(M));
}

TEST_CASE("disc groups of the examples") {
    CHECK(disc_group(RationalMatrix::identity(3)).order == 1);
    DiscGroup G2 = disc_group(RationalMatrix{{2}});
    CHECK(G2.order == 2);
    CHECK(G2.reps == std::vector<RatVec>{{Rat(0)}, {Rat(1)}});
    DiscGroup G = disc_group(RationalMatrix{{Rat(3, 2)}});
    CHECK(G.order == 6);
    std::vector<RatVec> expected;
    for (long k = 0; k < 6; ++k) expected.push_back({ratio(k, 2)});
    CHECK(G.reps == expected);
}

TEST_CASE("canonicalize") {
    DiscGroup G2 = disc_group(RationalMatrix{{2}});
    CHECK(canonicalize(G2, {Rat(3)}) == RatVec{Rat(1)});
    DiscGroup G = disc_group(RationalMatrix{{Rat(3, 2)}});
    CHECK(canonicalize(G, {Rat(7, 2)}) == RatVec{Rat(1, 2)});
    for (const auto& r : G.reps) CHECK(canonicalize(G, r) == r);
    try {
        canonicalize(G, {Rat(1, 3)});
        FAIL("no exception");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotInGroup);
    }
}

TEST_CASE("qvalue") {
    DiscGroup G2 = disc_group(RationalMatrix{{2}});
    CHECK(qvalue(G2, {Rat(0)}) == 0);
    CHECK(qvalue(G2, {Rat(1)}) == Rat(1, 4));
    DiscGroup G = disc_group(RationalMatrix{{Rat(3, 2)}});
    CHECK(qvalue(G, {Rat(1, 2)}) == Rat(1, 12));
    DiscGroup G3 = disc_group(RationalMatrix{{3}});
    CHECK_THROWS_AS(qvalue(G3, {Rat(1)}), Error);
}

TEST_CASE("qvalue is constant on cosets") {
    RationalMatrix M{{Rat(4, 3), Rat(1, 3)}, {Rat(1, 3), Rat(4, 3)}};
    REQUIRE(is_admissible_index(M));
    DiscGroup G = disc_group(M);
    IndexSplit s = split_index(M);
    for (const auto& nu : G.reps)
        for (std::size_t c = 0; c < 2; ++c) {
            RatVec shifted = nu + s.M_Z.column(c);
            CHECK(qvalue(G, canonicalize(G, shifted)) == qvalue(G, nu));
            CHECK(frac(Rat(1, 2) * gram_eval(M.inverse(), shifted)) == qvalue(G, nu));
        }
}

TEST_CASE("coset spaces have the expected sizes") {
    IndexSplit s = split_index(RationalMatrix{{Rat(3, 2)}});
    CHECK(CosetSpace(s, CosetSpace::Kind::Disc).size() == 6);
    CHECK(CosetSpace(s, CosetSpace::Kind::ModIntegers).size() == 2);
    CHECK(CosetSpace(s, CosetSpace::Kind::ModIndex).size() == 3);
}

}  // TEST_SUITE
