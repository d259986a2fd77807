#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jacobiq/heisenberg.hpp"
#include "jacobiq/theta.hpp"

namespace jacobiq {

// Type of a Jacobi form at coefficient level.
//   Scalar: one-dimensional, trivial on the Heisenberg part; needs integral M.
//   ThetaTensor: labels (μ, p), μ ∈ disc M, p in the orbit, as carried by θ^{(α,β)}_M.
class JacobiType {
public:
    enum class Kind { Scalar, ThetaTensor };

    static JacobiType scalar(const RationalMatrix& M);
    static JacobiType theta_tensor(const RationalMatrix& M, const RatVec& alpha = {}, const RatVec& beta = {});

    Kind kind() const { return kind_; }
    const RationalMatrix& M() const { return disc_.M; }
    const DiscGroup& disc() const { return disc_; }
    const OrbitAB& orbit() const { return orbit_; }
    const CosetSpace& mod_index() const { return mod_index_; }
    std::size_t width() const;
    std::size_t label(std::size_t mu_index, std::size_t pair_index) const;
    std::vector<std::string> labels() const;
    // C with ρ([0,0,κ]) = e(tr(Cκ))
    RationalMatrix kappa_matrix() const;

private:
    Kind kind_ = Kind::Scalar;
    DiscGroup disc_;
    OrbitAB orbit_;
    CosetSpace mod_index_;
};

struct JacobiFormData {
    Rat k;
    JacobiType type;
    FourierExpansion expansion;
};

// (μ, p) of the label together with the elliptic index r it is supported on.
struct LabelSupport {
    bool supported = false;
    std::size_t mu_index = 0;
    std::size_t pair_index = 0;
};

// ω(−1)^{2k} on the principal branch, ω(−1) = e(1/4).
CycScalar relation2_weight_factor(const Rat& k);

// Closure of the seed under both Fourier-coefficient relations up to seed.prec.
JacobiFormData symmetrize_expansion(const FourierExpansion& seed, const Rat& k, const JacobiType& type);

// Checks the relations on every stored coefficient whose images lie within precision.
bool satisfies_fourier_relations(const JacobiFormData& phi, std::string* witness = nullptr, bool check_relation2 = true);

// h_ν, ν ∈ (Mℤ^N + ℤ^N)/Mℤ^N, as scalar streams q^n.
// prec is the precision of the form; h_ν is known for n <= precs[ν] = prec − shift of ν.
struct ComponentVector {
    RationalMatrix M;
    Rat prec;
    std::vector<RatVec> nus;
    std::vector<Rat> precs;
    std::vector<std::map<Rat, CycScalar>> h;

    bool operator==(const ComponentVector& o) const;
};

ComponentVector theta_decompose(const JacobiFormData& phi);
JacobiFormData theta_reconstruct(const ComponentVector& h, const Rat& k, const JacobiType& type, const Rat& prec);

// Per ν: least ½M^{-1}[r + α_p] over lifts r of ν and orbit pairs p, with the first minimizing p and r.
struct ComponentLift {
    Rat shift;
    std::size_t pair = 0;
    RatVec lift;
};
std::vector<ComponentLift> component_lifts(const JacobiType& type);

// Zero components for a form of precision prec.
ComponentVector component_template(const JacobiType& type, const Rat& prec);

Rat vanishing_bound(const Rat& k, const RationalMatrix& M);
Rat vv_vanishing_bound(const Rat& k);

struct VanishingReport {
    bool vanishes = false;
    Rat bound;
    std::optional<TermKey> first_nonzero;
    std::size_t label = 0;
};

VanishingReport certify_vanishing(const JacobiFormData& phi);

// ρ([0,0,κ]) = e(tr(Cκ)) against e(½tr(Mκ)) on κ = E_ii, E_ij + E_ji.
bool central_character_check(const RationalMatrix& C, const RationalMatrix& M);
bool central_character_check(const JacobiType& type);
// rho(κ) supplies the matrix of [0,0,κ].
bool central_character_check(const std::function<RepMatrix(const RationalMatrix&)>& rho, const RationalMatrix& M);

}  // namespace jacobiq
