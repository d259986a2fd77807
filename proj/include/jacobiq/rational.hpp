#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "jacobiq/error.hpp"

namespace jacobiq {

using Rat = mpq_class;
using Int = mpz_class;
using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

Rat parse_rat(const std::string& s);

// a/b in lowest terms; b != 0.
inline Rat ratio(long a, long b) {
    Rat q(a, b);
    q.canonicalize();
    return q;
}
std::string to_string(const Rat& q);
std::string to_string(const RatVec& v);

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);
// q mod 1 in [0,1)
Rat frac(const Rat& q);
// q mod m in [0,m), m > 0
Rat mod_rat(const Rat& q, const Rat& m);
bool is_integer(const Rat& q);
bool is_integral(const RatVec& v);
Int lcm_denominators(const RatVec& v);

RatVec to_rat(const IntVec& v);
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a);
RatVec operator*(const Rat& s, const RatVec& a);
Rat dot(const RatVec& a, const RatVec& b);
bool lex_less(const RatVec& a, const RatVec& b);

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::initializer_list<std::initializer_list<Rat>> rows);
    static RationalMatrix identity(std::size_t n);
    static RationalMatrix diagonal(const RatVec& d);
    static RationalMatrix from_columns(const std::vector<RatVec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RatVec column(std::size_t j) const;
    RatVec row(std::size_t i) const;
    RationalMatrix transpose() const;
    RationalMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    bool is_symmetric() const;
    bool is_integral() const;
    Int denominator_lcm() const;

    Rat det() const;
    RationalMatrix inverse() const;  // throws Singular
    std::size_t rank() const;

    bool operator==(const RationalMatrix& o) const;
    bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rat& s, const RationalMatrix& a);
RatVec operator*(const RationalMatrix& a, const RatVec& v);

// ᵗA·M·A
RationalMatrix congruent(const RationalMatrix& M, const RationalMatrix& A);

struct SnfResult {
    RationalMatrix U, D, V;
};

// A = U·D·V with U, V unimodular, D diagonal nonnegative with a divisibility chain
// after clearing the common denominator of A.
SnfResult snf(const RationalMatrix& A);

RationalMatrix adjugate(const RationalMatrix& M);

bool is_positive_definite(const RationalMatrix& M);
bool is_positive_semidefinite(const RationalMatrix& M);

Rat gram_eval(const RationalMatrix& M, const RatVec& x);
Rat bilinear(const RationalMatrix& M, const RatVec& x, const RatVec& y);

// Unimodular g whose last column is the primitive vector v.
RationalMatrix unimodular_completion(const IntVec& v);

// Exact solve of A·x = b for square nonsingular A.
RatVec solve(const RationalMatrix& A, const RatVec& b);
// Basis of the rational kernel of A.
std::vector<RatVec> kernel(const RationalMatrix& A);

// Invariant factors of an integer matrix (nonzero ones).
IntVec invariant_factors(const RationalMatrix& A);

}  // namespace jacobiq
