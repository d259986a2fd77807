#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacobiq/cyclotomic.hpp"
#include "jacobiq/disc.hpp"
#include "jacobiq/rational.hpp"

namespace jacobiq {

// [λ, μ, κ] with λ, μ ∈ ℤ^N and κ ∈ Mat_N(ℤ).
struct HeisenbergElement {
    IntVec lambda;
    IntVec mu;
    RationalMatrix kappa;

    static HeisenbergElement zero(std::size_t n);
    static HeisenbergElement translation(const IntVec& lambda, const IntVec& mu);
    static HeisenbergElement central(const RationalMatrix& kappa);
};

struct Generator {
    enum class Kind { S, T, Heisenberg };
    Kind kind = Kind::S;
    HeisenbergElement h;

    static Generator S() { return {Kind::S, {}}; }
    static Generator T() { return {Kind::T, {}}; }
    static Generator heisenberg(const HeisenbergElement& e) { return {Kind::Heisenberg, e}; }
};

// π_{M,α,β} on the basis 𝔢_r, r ∈ (Mℤ^N + ℤ^N)/ℤ^N.
class PiRep {
public:
    PiRep(const RationalMatrix& M, const RatVec& alpha, const RatVec& beta);

    const RationalMatrix& M() const { return split_.M; }
    const RatVec& alpha() const { return alpha_; }
    const RatVec& beta() const { return beta_; }
    const IndexSplit& split() const { return split_; }
    const CosetSpace& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    std::vector<std::string> labels() const;

private:
    IndexSplit split_;
    RatVec alpha_, beta_;
    CosetSpace basis_;
};

// π([λ,0,0])·π([0,μ,0])·π([0,0,κ]).
RepMatrix pi_matrix(const PiRep& rep, const HeisenbergElement& h);
// e(½ᵗλMμ)·π([λ,0,0])·π([0,μ,0]).
RepMatrix pi_weyl(const PiRep& rep, const IntVec& lambda, const IntVec& mu);

struct PiIsomorphism {
    bool isomorphic = false;
    std::optional<RepMatrix> intertwiner;  // ι·π₁(g) = π₂(g)·ι
    std::string reason;
    std::string witness;
};

PiIsomorphism pi_isomorphism(const PiRep& rep1, const PiRep& rep2);

struct PiRepCheck {
    bool commutation = true;
    bool unitary = true;
    bool eigen_distinct = true;
    bool transitive = true;
    std::string witness;
    bool ok() const { return commutation && unitary && eigen_distinct && transitive; }
};

// Exact structural checks; commutation is tested on every pair of the given λ, μ.
PiRepCheck check_pi_rep(const PiRep& rep, const std::vector<IntVec>& lambdas, const std::vector<IntVec>& mus);

struct ABPair {
    RatVec alpha;
    RatVec beta;
    bool operator==(const ABPair& o) const { return alpha == o.alpha && beta == o.beta; }
};

struct OrbitAB {
    RationalMatrix M;
    IndexSplit split;
    std::vector<ABPair> pairs;

    std::size_t index_of(const ABPair& p) const;  // p canonical; throws NotInGroup
};

ABPair canonical_pair(const IndexSplit& s, const RatVec& alpha, const RatVec& beta);
OrbitAB orbit_alpha_beta(const RationalMatrix& M, const RatVec& alpha, const RatVec& beta);

// ρ_M on 𝔢_ν, ν ∈ disc M.
RepMatrix rho_M_matrix(const DiscGroup& G, const Generator& g);
// e(½ᵗλMμ)·ρ_M([λ,0,0])·ρ_M([0,μ,0]).
RepMatrix rho_M_weyl(const DiscGroup& G, const IntVec& lambda, const IntVec& mu);

struct RhoRelationsReport {
    CycScalar gauss;
    bool gauss_unit = false;
    bool st3 = false;
    bool s2_permutation = false;
    bool conj_S = false;
    bool conj_T = false;
    std::vector<CycScalar> conj_S_factors;  // one per generator e_i in λ, then in μ
    std::vector<std::string> witnesses;
    bool ok() const { return gauss_unit && st3 && s2_permutation && conj_S && conj_T; }
};

RhoRelationsReport rho_relations_report(const DiscGroup& G);

// ρ_{M,α,β} on ⊕_{p ∈ orbit} V_{M,p}.
RepMatrix rho_induced_matrix(const OrbitAB& orbit, const Generator& g);

struct InducedReport {
    bool conjugation = false;
    bool st3_block_scalar = false;
    bool unitary = false;
    std::vector<std::string> witnesses;
    bool ok() const { return conjugation && st3_block_scalar && unitary; }
};

InducedReport rho_induced_report(const OrbitAB& orbit);

// Integer λ with Mλ ≡ r mod ℤ^N, r ∈ Mℤ^N + ℤ^N.
IntVec lift_to_index_image(const IndexSplit& s, const RatVec& r);

}  // namespace jacobiq
