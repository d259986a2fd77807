#pragma once

#include <cstddef>
#include <vector>

#include "jacobiq/rational.hpp"

namespace jacobiq {

// M = U·D·V, D = D_Z·D^Z with D_Z = diag(a_i), D^Z = diag(1/b_i).
struct IndexSplit {
    RationalMatrix M;
    RationalMatrix M_Z;
    RationalMatrix M_frac;
    RationalMatrix M_inv;
    SnfResult smith;
    RationalMatrix U_inv;
    IntVec a, b;
};

IndexSplit split_index(const RationalMatrix& M);

// Generators (columns) of M^{-1}ℤ^N ∩ ℤ^N.
RationalMatrix dual_integral_generators(const IndexSplit& s);

bool is_admissible_index(const RationalMatrix& M);
bool is_admissible_index(const IndexSplit& s);

// Quotient of M_frac·ℤ^N by a sublattice that is diagonal in the coordinates
// w = (D^Z)^{-1}·U^{-1}·x.  Modulus a·b gives disc M, b gives (Mℤ^N+ℤ^N)/ℤ^N,
// a gives (Mℤ^N+ℤ^N)/Mℤ^N.
class CosetSpace {
public:
    enum class Kind { Disc, ModIntegers, ModIndex };

    CosetSpace() = default;
    CosetSpace(const IndexSplit& s, Kind kind);

    std::size_t size() const { return reps_.size(); }
    const std::vector<RatVec>& reps() const { return reps_; }
    const IntVec& moduli() const { return mod_; }

    // Throws NotInGroup unless x ∈ Mℤ^N + ℤ^N.
    IntVec coords(const RatVec& x) const;
    RatVec canonicalize(const RatVec& x) const;
    std::size_t index_of(const RatVec& x) const;
    bool contains(const RatVec& x) const;

private:
    RationalMatrix UDz_;
    RationalMatrix inv_;
    IntVec mod_;
    std::vector<RatVec> reps_;
};

struct DiscGroup {
    RationalMatrix M;
    Int order;
    std::vector<RatVec> reps;
    RatVec elementary_divisors;
    IndexSplit split;
    CosetSpace space;

    std::size_t index_of(const RatVec& x) const { return space.index_of(x); }
};

DiscGroup disc_group(const RationalMatrix& M);

RatVec canonicalize(const DiscGroup& G, const RatVec& x);

// ½·M^{-1}[ν] mod 1; throws NotAdmissible.
Rat qvalue(const DiscGroup& G, const RatVec& nu);

void require_positive_definite(const RationalMatrix& M);

}  // namespace jacobiq
