#include "jacobiq/disc.hpp"

#include <algorithm>

namespace jacobiq {

void require_positive_definite(const RationalMatrix& M) {
    if (!M.is_symmetric()) throw Error(ErrorCode::NonSymmetric, "index is not symmetric", M.to_string());
    if (!is_positive_definite(M))
        throw Error(ErrorCode::NotPositiveDefinite, "matrix is not positive definite", M.to_string());
}

IndexSplit split_index(const RationalMatrix& M) {
    if (!M.is_square()) throw Error(ErrorCode::DimensionMismatch, "index must be square");
    if (!M.is_symmetric()) throw Error(ErrorCode::NonSymmetric, "index is not symmetric", M.to_string());
    if (M.det() == 0) throw Error(ErrorCode::Singular, "index is singular", M.to_string());
    IndexSplit s;
    s.M = M;
    s.smith = snf(M);
    std::size_t n = M.rows();
    RatVec dz(n), dfrac(n);
    s.a.resize(n);
    s.b.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Rat& d = s.smith.D(i, i);
        s.a[i] = d.get_num();
        s.b[i] = d.get_den();
        dz[i] = Rat(s.a[i]);
        dfrac[i] = Rat(1, 1) / Rat(s.b[i]);
    }
    s.M_Z = s.smith.U * RationalMatrix::diagonal(dz) * s.smith.V;
    s.M_frac = s.smith.U * RationalMatrix::diagonal(dfrac) * s.smith.V;
    s.M_inv = M.inverse();
    s.U_inv = s.smith.U.inverse();
    return s;
}

RationalMatrix dual_integral_generators(const IndexSplit& s) { return s.M_frac.inverse(); }

bool is_admissible_index(const IndexSplit& s) {
    RationalMatrix g = dual_integral_generators(s);
    RationalMatrix G = congruent(s.M, g);
    for (std::size_t i = 0; i < G.rows(); ++i) {
        if (!is_integer(G(i, i)) || G(i, i).get_num() % 2 != 0) return false;
        for (std::size_t j = 0; j < G.cols(); ++j)
            if (!is_integer(G(i, j))) return false;
    }
    return true;
}

bool is_admissible_index(const RationalMatrix& M) {
    require_positive_definite(M);
    return is_admissible_index(split_index(M));
}

CosetSpace::CosetSpace(const IndexSplit& s, Kind kind) {
    std::size_t n = s.M.rows();
    RatVec dfrac(n);
    mod_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        dfrac[i] = Rat(1) / Rat(s.b[i]);
        switch (kind) {
            case Kind::Disc: mod_[i] = s.a[i] * s.b[i]; break;
            case Kind::ModIntegers: mod_[i] = s.b[i]; break;
            case Kind::ModIndex: mod_[i] = s.a[i]; break;
        }
    }
    UDz_ = s.smith.U * RationalMatrix::diagonal(dfrac);
    inv_ = UDz_.inverse();

    std::size_t total = 1;
    for (const auto& m : mod_) total *= m.get_ui();
    reps_.reserve(total);
    IntVec w(n, Int(0));
    for (std::size_t k = 0; k < total; ++k) {
        // mixed radix, first coordinate most significant
        std::size_t rem = k;
        for (std::size_t i = n; i-- > 0;) {
            std::size_t m = mod_[i].get_ui();
            w[i] = Int(static_cast<unsigned long>(rem % m));
            rem /= m;
        }
        reps_.push_back(UDz_ * to_rat(w));
    }
}

IntVec CosetSpace::coords(const RatVec& x) const {
    if (x.size() != inv_.cols()) throw Error(ErrorCode::DimensionMismatch, "vector has wrong length");
    RatVec w = inv_ * x;
    if (!is_integral(w))
        throw Error(ErrorCode::NotInGroup, "vector is not in M Z^N + Z^N", to_string(x));
    IntVec r(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        Int t = w[i].get_num();
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), mod_[i].get_mpz_t());
        r[i] = t;
    }
    return r;
}

bool CosetSpace::contains(const RatVec& x) const {
    if (x.size() != inv_.cols()) return false;
    return is_integral(inv_ * x);
}

RatVec CosetSpace::canonicalize(const RatVec& x) const { return UDz_ * to_rat(coords(x)); }

std::size_t CosetSpace::index_of(const RatVec& x) const {
    IntVec w = coords(x);
    std::size_t k = 0;
    for (std::size_t i = 0; i < w.size(); ++i) k = k * mod_[i].get_ui() + w[i].get_ui();
    return k;
}

DiscGroup disc_group(const RationalMatrix& M) {
    require_positive_definite(M);
    DiscGroup G;
    G.M = M;
    G.split = split_index(M);
    G.space = CosetSpace(G.split, CosetSpace::Kind::Disc);
    G.reps = G.space.reps();
    G.order = static_cast<unsigned long>(G.reps.size());
    for (std::size_t i = 0; i < M.rows(); ++i) G.elementary_divisors.push_back(G.split.smith.D(i, i));
    return G;
}

RatVec canonicalize(const DiscGroup& G, const RatVec& x) { return G.space.canonicalize(x); }

Rat qvalue(const DiscGroup& G, const RatVec& nu) {
    if (!is_admissible_index(G.split))
        throw Error(ErrorCode::NotAdmissible, "index is not admissible", G.M.to_string());
    if (!G.space.contains(nu)) throw Error(ErrorCode::NotInGroup, "vector is not in the group", to_string(nu));
    return frac(Rat(1, 2) * gram_eval(G.split.M_inv, nu));
}

}  // namespace jacobiq
