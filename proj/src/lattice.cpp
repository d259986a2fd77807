#include "jacobiq/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace jacobiq {

namespace {

struct Ldl {
    RatVec d;
    std::vector<RatVec> m;  // m[i][j] for j > i
};

Ldl ldl(const RationalMatrix& Q) {
    std::size_t n = Q.rows();
    RationalMatrix A = Q;
    Ldl r;
    r.d.resize(n);
    r.m.assign(n, RatVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        r.d[i] = A(i, i);
        if (r.d[i] <= 0) throw Error(ErrorCode::NotPositiveDefinite, "form is not positive definite", Q.to_string());
        for (std::size_t j = i + 1; j < n; ++j) r.m[i][j] = A(i, j) / r.d[i];
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = i + 1; k < n; ++k) A(j, k) -= r.d[i] * r.m[i][j] * r.m[i][k];
    }
    return r;
}

IntVec canonical_sign(IntVec v) {
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

bool int_lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::size_t require_rank(const RationalMatrix& M, std::size_t max_rank) {
    require_positive_definite(M);
    if (M.rows() > max_rank)
        throw Error(ErrorCode::RankTooLarge, "rank exceeds supported range", std::to_string(M.rows()));
    return M.rows();
}

}  // namespace

void enumerate_ellipsoid(const RationalMatrix& Q, const RatVec& center, const Rat& bound,
                         const std::function<void(const IntVec&, const Rat&)>& visit) {
    if (bound < 0) return;
    std::size_t n = Q.rows();
    if (center.size() != n) throw Error(ErrorCode::DimensionMismatch, "center has wrong length");
    Ldl f = ldl(Q);
    IntVec x(n, Int(0));
    RatVec y(n, Rat(0));

    std::function<void(std::size_t, const Rat&)> rec = [&](std::size_t level, const Rat& rem) {
        std::size_t i = level;
        Rat ctr = center[i];
        for (std::size_t j = i + 1; j < n; ++j) ctr -= f.m[i][j] * y[j];
        double rad = std::sqrt(std::max(0.0, Rat(rem / f.d[i]).get_d()));
        double cd = ctr.get_d();
        long long lo = static_cast<long long>(std::floor(cd - rad)) - 1;
        long long hi = static_cast<long long>(std::ceil(cd + rad)) + 1;
        for (long long t = lo; t <= hi; ++t) {
            Rat diff = Rat(Int(static_cast<long>(t))) - ctr;
            Rat used = f.d[i] * diff * diff;
            if (used > rem) continue;
            x[i] = Int(static_cast<long>(t));
            y[i] = Rat(x[i]) - center[i];
            Rat left = rem - used;
            if (i == 0)
                visit(x, bound - left);
            else
                rec(i - 1, left);
        }
        y[i] = 0;
    };
    if (n == 0) {
        visit(x, Rat(0));
        return;
    }
    rec(n - 1, bound);
}

ShortestVectors shortest_vectors(const RationalMatrix& M) {
    require_rank(M, 6);
    std::size_t n = M.rows();
    Rat bound = M(0, 0);
    for (std::size_t i = 1; i < n; ++i) bound = std::min(bound, M(i, i));
    ShortestVectors sv;
    bool first = true;
    std::set<IntVec, decltype(&int_lex_less)> seen(&int_lex_less);
    enumerate_ellipsoid(M, RatVec(n, Rat(0)), bound, [&](const IntVec& x, const Rat& v) {
        if (v == 0) return;
        if (first || v < sv.min_norm) {
            first = false;
            sv.min_norm = v;
            seen.clear();
        }
        if (v == sv.min_norm) seen.insert(canonical_sign(x));
    });
    sv.vectors.assign(seen.begin(), seen.end());
    return sv;
}

std::vector<IntVec> closest_vectors(const RationalMatrix& M, const RatVec& t, Rat* dist) {
    std::size_t n = M.rows();
    IntVec r(n);
    RatVec diff(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = floor_rat(t[i] + Rat(1, 2));
        diff[i] = Rat(r[i]) - t[i];
    }
    Rat bound = gram_eval(M, diff);
    Rat best = bound;
    std::vector<IntVec> out;
    enumerate_ellipsoid(M, t, bound, [&](const IntVec& x, const Rat& v) {
        if (v < best) {
            best = v;
            out.clear();
        }
        if (v == best) out.push_back(x);
    });
    std::sort(out.begin(), out.end(), int_lex_less);
    if (dist) *dist = best;
    return out;
}

// ---------------------------------------------------------------- reduction

namespace {

bool extends_primitively(const std::vector<IntVec>& chosen, const IntVec& v) {
    std::size_t n = v.size();
    std::vector<RatVec> cols;
    for (const auto& c : chosen) cols.push_back(to_rat(c));
    cols.push_back(to_rat(v));
    RationalMatrix B = RationalMatrix::from_columns(cols);
    if (B.rank() != cols.size()) return false;
    IntVec f = invariant_factors(B);
    (void)n;
    return f.size() == cols.size() && std::all_of(f.begin(), f.end(), [](const Int& x) { return x == 1; });
}

struct Candidate {
    Rat norm;
    IntVec v;
};

// Vectors (up to sign) of norm <= R, sorted by (norm, entries).
std::vector<Candidate> short_list(const RationalMatrix& M, const Rat& R) {
    std::vector<Candidate> out;
    std::size_t n = M.rows();
    enumerate_ellipsoid(M, RatVec(n, Rat(0)), R, [&](const IntVec& x, const Rat& v) {
        if (v == 0) return;
        if (canonical_sign(x) != x) return;
        out.push_back({v, x});
    });
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        if (a.norm != b.norm) return a.norm < b.norm;
        return int_lex_less(a.v, b.v);
    });
    return out;
}

// All vectors of least norm extending `chosen`.
std::vector<Candidate> minimal_extensions(const RationalMatrix& M, const std::vector<IntVec>& chosen) {
    Rat R = M(0, 0);
    for (std::size_t i = 1; i < M.rows(); ++i) R = std::max(R, M(i, i));
    while (true) {
        std::vector<Candidate> list = short_list(M, R);
        std::vector<Candidate> out;
        for (const auto& c : list) {
            if (!out.empty() && c.norm != out.front().norm) break;
            if (extends_primitively(chosen, c.v)) out.push_back(c);
        }
        if (!out.empty()) return out;
        R *= 2;
    }
}

RationalMatrix basis_matrix(const std::vector<IntVec>& cols) {
    std::vector<RatVec> c;
    for (const auto& v : cols) c.push_back(to_rat(v));
    return RationalMatrix::from_columns(c);
}

}  // namespace

ReducedBasis minkowski_reduce(const RationalMatrix& M) {
    require_rank(M, 4);
    std::vector<IntVec> chosen;
    for (std::size_t i = 0; i < M.rows(); ++i) chosen.push_back(minimal_extensions(M, chosen).front().v);
    ReducedBasis rb;
    rb.g = basis_matrix(chosen);
    if (rb.g.det() < 0)
        for (std::size_t i = 0; i < M.rows(); ++i) rb.g(i, M.rows() - 1) = -rb.g(i, M.rows() - 1);
    rb.gram = congruent(M, rb.g);
    return rb;
}

Rat md(const RationalMatrix& M) {
    ReducedBasis rb = minkowski_reduce(M);
    Rat m = rb.gram(0, 0);
    for (std::size_t i = 1; i < rb.gram.rows(); ++i) m = std::max(m, rb.gram(i, i));
    return m;
}

namespace {

RatVec gram_key(const RationalMatrix& G) {
    RatVec k;
    std::size_t n = G.rows();
    for (std::size_t i = 0; i < n; ++i) k.push_back(G(i, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) k.push_back(G(i, j));
    return k;
}

void all_greedy(const RationalMatrix& M, std::vector<IntVec>& chosen, std::optional<RationalMatrix>& best,
                RatVec& best_key) {
    std::size_t n = M.rows();
    if (chosen.size() == n) {
        RationalMatrix G = congruent(M, basis_matrix(chosen));
        for (unsigned signs = 0; signs < (1u << n); ++signs) {
            RationalMatrix H = G;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    bool flip = (((signs >> i) & 1u) ^ ((signs >> j) & 1u)) != 0;
                    if (flip) H(i, j) = -H(i, j);
                }
            RatVec k = gram_key(H);
            if (!best || lex_less(k, best_key)) {
                best = H;
                best_key = k;
            }
        }
        return;
    }
    for (const auto& c : minimal_extensions(M, chosen)) {
        chosen.push_back(c.v);
        all_greedy(M, chosen, best, best_key);
        chosen.pop_back();
    }
}

}  // namespace

RationalMatrix reduced_canonical_form(const RationalMatrix& M) {
    require_rank(M, 4);
    std::vector<IntVec> chosen;
    std::optional<RationalMatrix> best;
    RatVec key;
    all_greedy(M, chosen, best, key);
    return *best;
}

// ---------------------------------------------------------------- Voronoi

VoronoiData voronoi(const RationalMatrix& M) {
    std::size_t n = require_rank(M, 4);
    VoronoiData vd;
    // relevant vectors: the classes of ℤ^N/2ℤ^N whose minimum is attained only at ±v
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        RatVec half(n);
        for (std::size_t i = 0; i < n; ++i) half[i] = Rat(((mask >> i) & 1u) ? -1 : 0, 2);
        std::vector<IntVec> ys = closest_vectors(M, half);
        if (ys.size() != 2) continue;
        IntVec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = Int((mask >> i) & 1u) + 2 * ys[0][i];
        vd.relevant_vectors.push_back(v);
        IntVec w = v;
        for (auto& x : w) x = -x;
        vd.relevant_vectors.push_back(w);
    }
    std::sort(vd.relevant_vectors.begin(), vd.relevant_vectors.end(), int_lex_less);

    std::size_t k = vd.relevant_vectors.size();
    // facet i: (M v_i)·x <= ½ M[v_i]
    std::vector<RatVec> normals(k);
    RatVec rhs(k);
    std::vector<std::vector<double>> nd(k, std::vector<double>(n));
    std::vector<double> rd_(k);
    for (std::size_t i = 0; i < k; ++i) {
        RatVec v = to_rat(vd.relevant_vectors[i]);
        normals[i] = M * v;
        rhs[i] = Rat(1, 2) * gram_eval(M, v);
        for (std::size_t j = 0; j < n; ++j) nd[i][j] = normals[i][j].get_d();
        rd_[i] = rhs[i].get_d();
    }
    auto opposite = [&](std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < n; ++j)
            if (vd.relevant_vectors[a][j] != -vd.relevant_vectors[b][j]) return false;
        return true;
    };

    std::set<RatVec, decltype(&lex_less)> verts(&lex_less);
    std::vector<std::size_t> idx(n);
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t pos, std::size_t start) {
        if (pos == n) {
            // floating-point screen, exact confirmation
            std::vector<std::vector<double>> A(n, std::vector<double>(n + 1));
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < n; ++c) A[r][c] = nd[idx[r]][c];
                A[r][n] = rd_[idx[r]];
            }
            for (std::size_t c = 0; c < n; ++c) {
                std::size_t p = c;
                for (std::size_t r = c + 1; r < n; ++r)
                    if (std::fabs(A[r][c]) > std::fabs(A[p][c])) p = r;
                if (std::fabs(A[p][c]) < 1e-9) return;
                std::swap(A[p], A[c]);
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == c) continue;
                    double f = A[r][c] / A[c][c];
                    for (std::size_t cc = c; cc <= n; ++cc) A[r][cc] -= f * A[c][cc];
                }
            }
            std::vector<double> xd(n);
            for (std::size_t c = 0; c < n; ++c) xd[c] = A[c][n] / A[c][c];
            for (std::size_t i = 0; i < k; ++i) {
                double s = 0;
                for (std::size_t j = 0; j < n; ++j) s += nd[i][j] * xd[j];
                if (s > rd_[i] + 1e-7) return;
            }
            RationalMatrix E(n, n);
            RatVec b(n);
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < n; ++c) E(r, c) = normals[idx[r]][c];
                b[r] = rhs[idx[r]];
            }
            if (E.det() == 0) return;
            RatVec x = solve(E, b);
            for (std::size_t i = 0; i < k; ++i)
                if (dot(normals[i], x) > rhs[i]) return;
            verts.insert(x);
            return;
        }
        for (std::size_t i = start; i < k; ++i) {
            bool clash = false;
            for (std::size_t p = 0; p < pos; ++p)
                if (opposite(idx[p], i)) clash = true;
            if (clash) continue;
            idx[pos] = i;
            choose(pos + 1, i + 1);
        }
    };
    choose(0, 0);
    vd.vertices.assign(verts.begin(), verts.end());
    vd.rd = 0;
    for (const auto& x : vd.vertices) vd.rd = std::max(vd.rd, gram_eval(M, x));
    return vd;
}

Rat rd(const RationalMatrix& M) { return voronoi(M).rd; }

Rat rd_upper_bound(const RationalMatrix& M) {
    std::size_t n = M.rows();
    return ratio(static_cast<long>(n * (n + 1)), 8) * md(M);
}

// ---------------------------------------------------------------- cosets

std::vector<CosetPoint> enumerate_coset_points(const IndexSplit& s, const RatVec& nu, const Rat& bound) {
    std::vector<CosetPoint> out;
    CosetSpace space(s, CosetSpace::Kind::Disc);
    if (!space.contains(nu)) throw Error(ErrorCode::NotInGroup, "offset is not in M Z^N + Z^N", to_string(nu));
    if (bound < 0) return out;
    // ξ = ν + M_Z·y,  ½M^{-1}[ξ] = ½Q[y + M_Z^{-1}ν] with Q = ᵗM_Z·M^{-1}·M_Z
    RationalMatrix Q = congruent(s.M_inv, s.M_Z);
    RatVec c = -(s.M_Z.inverse() * nu);
    enumerate_ellipsoid(Q, c, Rat(2) * bound, [&](const IntVec& y, const Rat&) {
        RatVec xi = nu + s.M_Z * to_rat(y);
        out.push_back({xi, Rat(1, 2) * gram_eval(s.M_inv, xi)});
    });
    std::sort(out.begin(), out.end(), [](const CosetPoint& a, const CosetPoint& b) {
        if (a.exponent != b.exponent) return a.exponent < b.exponent;
        return lex_less(a.xi, b.xi);
    });
    return out;
}

std::vector<CosetPoint> enumerate_coset_points(const RationalMatrix& M, const RatVec& nu, const Rat& bound) {
    require_positive_definite(M);
    return enumerate_coset_points(split_index(M), nu, bound);
}

// ---------------------------------------------------------------- degenerate index

DegenerateReduction degenerate_index_reduce(const RationalMatrix& M) {
    DegenerateReduction r;
    if (!is_positive_semidefinite(M)) {
        r.kind = DegenerateReduction::Kind::NotSemidefinite;
        return r;
    }
    if (is_positive_definite(M)) {
        r.kind = DegenerateReduction::Kind::Definite;
        return r;
    }
    r.kind = DegenerateReduction::Kind::Degenerate;
    RatVec k = kernel(M).front();
    Int l = lcm_denominators(k);
    IntVec v(k.size());
    Int g = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
        v[i] = Rat(k[i] * Rat(l)).get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
    }
    for (auto& x : v) x /= g;
    r.kernel_vector = canonical_sign(v);
    RationalMatrix gmat = unimodular_completion(r.kernel_vector);
    std::size_t n = M.rows();
    r.s = gmat.block(0, 0, n, n - 1);
    r.Ms = congruent(M, r.s);
    return r;
}

}  // namespace jacobiq
