#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "jacobiq/cyclotomic.hpp"
#include "jacobiq/heisenberg.hpp"
#include "jacobiq/rational.hpp"

namespace jacobiq {

using Complex = std::complex<double>;
using ComplexVec = std::vector<Complex>;

struct TermKey {
    Rat m;
    RatVec r;
    bool operator<(const TermKey& o) const {
        if (m != o.m) return m < o.m;
        return lex_less(r, o.r);
    }
    bool operator==(const TermKey& o) const { return m == o.m && r == o.r; }
};

// Truncated Σ c(m, r) q^m ζ^r with vector coefficients over `labels`; all m <= prec.
struct FourierExpansion {
    std::size_t N = 0;
    Rat prec;
    std::vector<std::string> labels{""};
    std::map<TermKey, std::vector<CycScalar>> terms;

    std::size_t width() const { return labels.size(); }
    // Zero when absent.
    CycScalar coeff(const Rat& m, const RatVec& r, std::size_t label = 0) const;
    void add(const Rat& m, const RatVec& r, std::size_t label, const CycScalar& c);
    void set(const Rat& m, const RatVec& r, std::size_t label, const CycScalar& c);
    void prune();
    bool is_zero() const;
};

bool operator==(const FourierExpansion& a, const FourierExpansion& b);

// θ_{M,ν}: (½M^{-1}[ξ], ξ) ↦ 1 for ξ ≡ ν mod Mℤ^N ∩ ℤ^N.
FourierExpansion theta_component(const RationalMatrix& M, const RatVec& nu, const Rat& prec);
// θ_M with one label per element of disc M.
FourierExpansion theta_vector(const RationalMatrix& M, const Rat& prec);
// θ^{(α,β)}_{M,ν}: (½M^{-1}[ξ+α], ξ+α) ↦ e(ᵗ(ξ+α)·M^{-1}β).
FourierExpansion theta_shifted(const RationalMatrix& M, const RatVec& nu, const RatVec& alpha, const RatVec& beta,
                               const Rat& prec);

struct Evaluation {
    ComplexVec values;    // one per label
    double tail_estimate; // largest |term| on the outermost stored shell
};

Evaluation evaluate_expansion(const FourierExpansion& f, Complex tau, const ComplexVec& z);

// ‖θ_M|gen − ρ_M(gen)θ_M‖∞ at (τ, z), weight N/2.
double modularity_residual(const RationalMatrix& M, const Rat& prec, Complex tau, const ComplexVec& z,
                           const Generator& gen);

}  // namespace jacobiq
