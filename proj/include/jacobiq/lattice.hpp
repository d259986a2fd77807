#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "jacobiq/disc.hpp"
#include "jacobiq/rational.hpp"

namespace jacobiq {

// Calls visit(x, Q[x - c]) for every integer x with Q[x - c] <= bound. Q positive definite.
void enumerate_ellipsoid(const RationalMatrix& Q, const RatVec& center, const Rat& bound,
                         const std::function<void(const IntVec&, const Rat&)>& visit);

struct ShortestVectors {
    Rat min_norm;
    std::vector<IntVec> vectors;  // one of each ±v, first nonzero entry positive
};

ShortestVectors shortest_vectors(const RationalMatrix& M);

// All integer x minimizing M[x - t].
std::vector<IntVec> closest_vectors(const RationalMatrix& M, const RatVec& t, Rat* dist = nullptr);

struct ReducedBasis {
    RationalMatrix g;
    RationalMatrix gram;
};

ReducedBasis minkowski_reduce(const RationalMatrix& M);
Rat md(const RationalMatrix& M);

// Lexicographically least Gram matrix over all greedy reduced bases and sign changes;
// a complete invariant of the GL_N(ℤ)-class for N <= 4.
RationalMatrix reduced_canonical_form(const RationalMatrix& M);

struct VoronoiData {
    std::vector<IntVec> relevant_vectors;
    std::vector<RatVec> vertices;
    Rat rd;
};

VoronoiData voronoi(const RationalMatrix& M);
Rat rd(const RationalMatrix& M);
Rat rd_upper_bound(const RationalMatrix& M);

struct CosetPoint {
    RatVec xi;
    Rat exponent;
};

// All ξ ≡ ν mod Mℤ^N ∩ ℤ^N with ½M^{-1}[ξ] <= bound, sorted by (exponent, ξ).
std::vector<CosetPoint> enumerate_coset_points(const RationalMatrix& M, const RatVec& nu, const Rat& bound);
std::vector<CosetPoint> enumerate_coset_points(const IndexSplit& s, const RatVec& nu, const Rat& bound);

struct DegenerateReduction {
    enum class Kind { NotSemidefinite, Degenerate, Definite };
    Kind kind;
    IntVec kernel_vector;
    RationalMatrix s;    // N × (N-1)
    RationalMatrix Ms;   // M[s]
};

DegenerateReduction degenerate_index_reduce(const RationalMatrix& M);

}  // namespace jacobiq
