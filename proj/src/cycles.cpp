#include "jacobiq/cycles.hpp"

#include <algorithm>
#include <map>

#include "jacobiq/lattice.hpp"

namespace jacobiq {

namespace {

RatVec form_key(const RationalMatrix& M) {
    RatVec k;
    for (std::size_t i = 0; i < M.rows(); ++i) k.push_back(M(i, i));
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = i + 1; j < M.cols(); ++j) k.push_back(M(i, j));
    return k;
}

struct KeyLess {
    bool operator()(const RatVec& a, const RatVec& b) const { return lex_less(a, b); }
};

// Calls visit on every symmetric N×N matrix with diagonal a_1 <= ... <= a_N in (1/d)ℤ ∩ (0, cap)
// and off-diagonal entries in (1/d)ℤ bounded by half the smaller diagonal entry.
void for_each_candidate(std::size_t N, long d, const Rat& cap, const std::function<void(const RationalMatrix&)>& visit) {
    Rat step(1, d);
    Int top = Int(ceil_rat(cap * d) - 1);  // largest k with k/d < cap
    if (top < 1) return;
    long kmax = top.get_si();
    RationalMatrix M(N, N);
    std::vector<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j) off.push_back({i, j});

    std::function<void(std::size_t)> rec_off = [&](std::size_t k) {
        if (k == off.size()) {
            visit(M);
            return;
        }
        auto [i, j] = off[k];
        Rat lim = std::min(M(i, i), M(j, j)) / 2;
        long b = floor_rat(lim * d).get_si();
        for (long t = -b; t <= b; ++t) {
            M(i, j) = M(j, i) = ratio(t, d);
            rec_off(k + 1);
        }
        M(i, j) = M(j, i) = 0;
    };
    std::function<void(std::size_t, long)> rec_diag = [&](std::size_t i, long lo) {
        if (i == N) {
            rec_off(0);
            return;
        }
        for (long t = lo; t <= kmax; ++t) {
            M(i, i) = ratio(t, d);
            rec_diag(i + 1, t);
        }
    };
    rec_diag(0, 1);
}

}  // namespace

Rat generator_bound(long n) { return Rat(1) + ratio(2 + 2 * n, 24); }

Rat diagonal_cap(std::size_t N, const Rat& B) {
    Rat c = Rat(1) - ratio(static_cast<long>(N * (N + 1)), 16);
    return B / c;
}

std::vector<IndexClass> enumerate_index_classes(std::size_t N, long d, const Rat& B, const Rat& cap_scale) {
    if (N < 1 || N > 3) throw Error(ErrorCode::RankTooLarge, "index rank must be between 1 and 3", std::to_string(N));
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "denominator must be positive");
    std::vector<IndexClass> out;
    if (B <= 0) return out;
    Rat cap = diagonal_cap(N, B) * cap_scale;
    std::map<RatVec, RationalMatrix, KeyLess> classes;
    for_each_candidate(N, d, cap, [&](const RationalMatrix& M) {
        if (!is_positive_definite(M)) return;
        RationalMatrix c = reduced_canonical_form(M);
        classes.emplace(form_key(c), c);
    });
    for (const auto& [key, M] : classes) {
        Rat m = md(M);
        Rat r = rd(M);
        if (m < B + r / 2) out.push_back({M, r, m});
    }
    return out;
}

RatVec reduce_p(const RationalMatrix& M, const RatVec& p) {
    RatVec t = Rat(1, 2) * (M.inverse() * p);
    auto vs = closest_vectors(M, t);
    std::optional<RatVec> best;
    for (const auto& v : vs) {
        RatVec q = p - Rat(2) * (M * to_rat(v));
        if (!best || lex_less(*best, q)) best = q;
    }
    return *best;
}

CycleGeneratorSet cycle_generators(int r, long n, long d, const Rat& cap_scale) {
    if (r < 2 || r > 4) throw Error(ErrorCode::RankOutOfRange, "rank must satisfy 2 <= r < 5", std::to_string(r));
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "signature parameter must be positive");
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "denominator must be positive");
    CycleGeneratorSet out;
    out.r = r;
    out.n = n;
    out.d = d;
    out.bound = generator_bound(n);
    std::size_t N = static_cast<std::size_t>(r - 1);
    out.classes = enumerate_index_classes(N, d, out.bound, cap_scale);
    for (const auto& cls : out.classes) {
        const RationalMatrix& M = cls.M;
        Rat upper = out.bound + cls.rd / 2;
        // (1/d)ℤ^N / 2Mℤ^N via the Smith form of 2dM
        RationalMatrix L = Rat(2 * d) * M;
        SnfResult s = snf(L);
        std::vector<RatVec> ps;
        IntVec w(N, Int(0));
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == N) {
                RatVec y = s.U * to_rat(w);
                ps.push_back(reduce_p(M, Rat(1, d) * y));
                return;
            }
            long mod = s.D(i, i).get_num().get_si();
            for (long t = 0; t < mod; ++t) {
                w[i] = t;
                rec(i + 1);
            }
        };
        rec(0);
        std::sort(ps.begin(), ps.end(), lex_less);
        long mtop = Int(ceil_rat(upper * d) - 1).get_si();
        for (const auto& p : ps)
            for (long k = 1; k <= mtop; ++k) {
                Rat m = ratio(k, d);
                RationalMatrix T(N + 1, N + 1);
                T(0, 0) = m;
                for (std::size_t i = 0; i < N; ++i) {
                    T(0, i + 1) = T(i + 1, 0) = p[i] / 2;
                    for (std::size_t j = 0; j < N; ++j) T(i + 1, j + 1) = M(i, j);
                }
                if (!is_positive_definite(T)) continue;
                out.matrices.push_back({T, m, p, M});
            }
    }
    return out;
}

}  // namespace jacobiq
