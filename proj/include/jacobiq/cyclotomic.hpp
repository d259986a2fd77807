#pragma once

#include <complex>
#include <string>
#include <vector>

#include "jacobiq/rational.hpp"

namespace jacobiq {

// Element of ℚ(ζ_L) in the power basis reduced modulo the L-th cyclotomic polynomial.
// Square roots n^{-1/2} are embedded through the quadratic Gauss sum of modulus 4n.
class CycScalar {
public:
    CycScalar();
    CycScalar(const Rat& q);  // NOLINT(google-explicit-constructor)
    CycScalar(long q) : CycScalar(Rat(q)) {}  // NOLINT(google-explicit-constructor)

    // e(q) = exp(2πi q) for rational q.
    static CycScalar e(const Rat& q);
    // n^{-1/2}, n > 0
    static CycScalar inv_sqrt(const Int& n);

    unsigned order() const { return L_; }
    const std::vector<Rat>& coefficients() const { return a_; }

    bool is_zero() const;
    CycScalar conj() const;
    std::complex<double> to_complex() const;
    CycScalar lifted(unsigned L) const;

    CycScalar operator+(const CycScalar& o) const;
    CycScalar operator-(const CycScalar& o) const;
    CycScalar operator-() const;
    CycScalar operator*(const CycScalar& o) const;
    CycScalar& operator+=(const CycScalar& o) { return *this = *this + o; }
    CycScalar& operator*=(const CycScalar& o) { return *this = *this * o; }
    bool operator==(const CycScalar& o) const;
    bool operator!=(const CycScalar& o) const { return !(*this == o); }

    // Σ c_j·e(j/L), j < φ(L), for serialization.
    struct Term {
        Rat exponent;  // j/L reduced
        Rat coeff;
    };
    std::vector<Term> terms() const;
    static CycScalar from_terms(const std::vector<Term>& t);

    std::string to_string() const;

private:
    unsigned L_ = 1;
    std::vector<Rat> a_;

    static CycScalar lift_to(const CycScalar& x, unsigned L);
};

class RepMatrix {
public:
    RepMatrix() = default;
    explicit RepMatrix(std::size_t dim);
    static RepMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    CycScalar& operator()(std::size_t i, std::size_t j) { return e_[i * dim_ + j]; }
    const CycScalar& operator()(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }

    std::vector<std::string> labels;

    RepMatrix adjoint() const;  // conjugate transpose
    bool is_unitary() const;
    // nonzero pattern is a permutation; returns image index per column or empty
    std::vector<std::size_t> monomial_pattern() const;

    RepMatrix operator*(const RepMatrix& o) const;
    RepMatrix operator*(const CycScalar& s) const;
    RepMatrix operator+(const RepMatrix& o) const;
    bool operator==(const RepMatrix& o) const;
    bool operator!=(const RepMatrix& o) const { return !(*this == o); }

    std::vector<std::complex<double>> apply(const std::vector<std::complex<double>>& v) const;

private:
    std::size_t dim_ = 0;
    std::vector<CycScalar> e_;
};

}  // namespace jacobiq
