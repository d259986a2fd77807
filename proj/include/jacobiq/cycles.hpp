#pragma once

#include <vector>

#include "jacobiq/rational.hpp"

namespace jacobiq {

// T = [[m, ᵗp/2], [p/2, M]]
struct MomentMatrix {
    RationalMatrix T;
    Rat m;
    RatVec p;
    RationalMatrix M;
};

struct IndexClass {
    RationalMatrix M;  // reduced canonical form
    Rat rd;
    Rat md;
};

struct CycleGeneratorSet {
    int r = 0;
    long n = 0;
    long d = 0;
    Rat bound;
    std::vector<IndexClass> classes;
    std::vector<MomentMatrix> matrices;
};

// 1 + (2 + 2n)/24
Rat generator_bound(long n);

// Exclusive cap on the diagonal of a reduced M with md(M) < B + ½rd(M).
Rat diagonal_cap(std::size_t N, const Rat& B);

// Reduced positive definite M, d·M integral, md(M) < B + ½rd(M); cap_scale enlarges the search box.
std::vector<IndexClass> enumerate_index_classes(std::size_t N, long d, const Rat& B, const Rat& cap_scale = Rat(1));

// Representative of p modulo 2Mℤ^N closest to 0 in the M^{-1} norm; ties go to the lexicographically largest.
RatVec reduce_p(const RationalMatrix& M, const RatVec& p);

CycleGeneratorSet cycle_generators(int r, long n, long d, const Rat& cap_scale = Rat(1));

}  // namespace jacobiq
