#include "jacobiq/heisenberg.hpp"

#include <algorithm>
#include <deque>

namespace jacobiq {

namespace {

Rat half_trace(const RationalMatrix& M, const RationalMatrix& kappa) {
    if (kappa.rows() == 0) return Rat(0);
    if (kappa.rows() != M.rows() || kappa.cols() != M.cols())
        throw Error(ErrorCode::DimensionMismatch, "kappa has wrong shape");
    if (!kappa.is_integral()) throw Error(ErrorCode::InvalidArgument, "kappa must be integral", kappa.to_string());
    Rat t = 0;
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) t += M(i, j) * kappa(j, i);
    return t / 2;
}

IntVec zero_int(std::size_t n) { return IntVec(n, Int(0)); }

IntVec unit_int(std::size_t n, std::size_t i) {
    IntVec v = zero_int(n);
    v[i] = 1;
    return v;
}

IntVec neg(const IntVec& v) {
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

IntVec add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

void check_len(const IntVec& v, std::size_t n, const char* what) {
    if (!v.empty() && v.size() != n)
        throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has wrong length");
}

IntVec or_zero(const IntVec& v, std::size_t n) { return v.empty() ? zero_int(n) : v; }

RatVec reduce_box(const RationalMatrix& B, const RationalMatrix& Binv, const RatVec& x) {
    RatVec w = Binv * x;
    for (auto& c : w) c = frac(c);
    return B * w;
}

bool pair_less(const ABPair& a, const ABPair& b) {
    if (a.alpha != b.alpha) return lex_less(a.alpha, b.alpha);
    return lex_less(a.beta, b.beta);
}

// c with A = c·B, B monomial with unimodular entries.
std::optional<CycScalar> scalar_ratio(const RepMatrix& A, const RepMatrix& B) {
    std::optional<CycScalar> c;
    for (std::size_t i = 0; i < B.dim() && !c; ++i)
        for (std::size_t j = 0; j < B.dim(); ++j)
            if (!B(i, j).is_zero()) {
                c = A(i, j) * B(i, j).conj();
                break;
            }
    if (!c) return std::nullopt;
    if (!(A == B * *c)) return std::nullopt;
    return c;
}

RepMatrix block_diagonal(const std::vector<RepMatrix>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.dim();
    RepMatrix R(n);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j) R(off + i, off + j) = b(i, j);
        for (const auto& l : b.labels) R.labels.push_back(l);
        off += b.dim();
    }
    return R;
}

}  // namespace

HeisenbergElement HeisenbergElement::zero(std::size_t n) {
    return {zero_int(n), zero_int(n), RationalMatrix(n, n)};
}

HeisenbergElement HeisenbergElement::translation(const IntVec& lambda, const IntVec& mu) {
    std::size_t n = std::max(lambda.size(), mu.size());
    return {or_zero(lambda, n), or_zero(mu, n), RationalMatrix(n, n)};
}

HeisenbergElement HeisenbergElement::central(const RationalMatrix& kappa) {
    return {zero_int(kappa.rows()), zero_int(kappa.rows()), kappa};
}

PiRep::PiRep(const RationalMatrix& M, const RatVec& alpha, const RatVec& beta)
    : split_(split_index(M)), alpha_(alpha), beta_(beta) {
    require_positive_definite(M);
    std::size_t n = M.rows();
    if (alpha_.empty()) alpha_.assign(n, Rat(0));
    if (beta_.empty()) beta_.assign(n, Rat(0));
    if (alpha_.size() != n || beta_.size() != n)
        throw Error(ErrorCode::DimensionMismatch, "alpha/beta have wrong length");
    basis_ = CosetSpace(split_, CosetSpace::Kind::ModIntegers);
}

std::vector<std::string> PiRep::labels() const {
    std::vector<std::string> l;
    for (const auto& r : basis_.reps()) l.push_back(to_string(r));
    return l;
}

RepMatrix pi_matrix(const PiRep& rep, const HeisenbergElement& h) {
    std::size_t n = rep.M().rows();
    check_len(h.lambda, n, "lambda");
    check_len(h.mu, n, "mu");
    IntVec lambda = or_zero(h.lambda, n), mu = or_zero(h.mu, n);
    RatVec ml = rep.M() * to_rat(lambda);
    Rat base = dot(rep.alpha(), to_rat(lambda)) + half_trace(rep.M(), h.kappa);
    RepMatrix R(rep.dim());
    R.labels = rep.labels();
    const auto& reps = rep.basis().reps();
    for (std::size_t j = 0; j < reps.size(); ++j) {
        std::size_t i = rep.basis().index_of(reps[j] + ml);
        R(i, j) = CycScalar::e(base + dot(rep.beta() + reps[j], to_rat(mu)));
    }
    return R;
}

RepMatrix pi_weyl(const PiRep& rep, const IntVec& lambda, const IntVec& mu) {
    RepMatrix P = pi_matrix(rep, HeisenbergElement::translation(lambda, mu));
    return P * CycScalar::e(Rat(1, 2) * bilinear(rep.M(), to_rat(lambda), to_rat(mu)));
}

PiIsomorphism pi_isomorphism(const PiRep& rep1, const PiRep& rep2) {
    PiIsomorphism out;
    std::size_t n = rep1.M().rows();
    if (rep2.M().rows() != n) {
        out.reason = "dimension";
        out.witness = std::to_string(n) + " vs " + std::to_string(rep2.M().rows());
        return out;
    }
    // central characters e(½tr(M₁κ)) and e(½tr(M₂κ)) on κ ∈ Mat_N(ℤ)
    RationalMatrix Dm = rep1.M() - rep2.M();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat half = Dm(i, j) / 2;
            if (!is_integer(half)) {
                out.reason = "central character";
                out.witness = "kappa=E_" + std::to_string(i + 1) + std::to_string(j + 1);
                return out;
            }
        }
    const IndexSplit& s1 = rep1.split();
    RationalMatrix gens = dual_integral_generators(s1);
    auto certify = [&](const RatVec& d, const char* what) -> bool {
        if (rep1.basis().contains(d)) return true;
        for (std::size_t c = 0; c < n; ++c) {
            RatVec g = gens.column(c);
            if (!is_integer(dot(d, g))) {
                out.reason = what;
                out.witness = to_string(g);
                return false;
            }
        }
        out.reason = what;
        out.witness = to_string(d);
        return false;
    };
    if (!certify(rep2.alpha() - rep1.alpha(), "alpha")) return out;
    if (!certify(rep1.beta() - rep2.beta(), "beta")) return out;

    // α₂ − α₁ = M₁a + b with a, b integral
    RatVec x = rep2.alpha() - rep1.alpha();
    RationalMatrix UDz = s1.smith.U;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) UDz(k, i) /= Rat(s1.b[i]);
    RatVec w = UDz.inverse() * x;
    RatVec sv(n);
    for (std::size_t i = 0; i < n; ++i) {
        Int g, u, v;
        mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), s1.a[i].get_mpz_t(), s1.b[i].get_mpz_t());
        sv[i] = w[i] * Rat(u);
    }
    RatVec a = s1.smith.V.inverse() * sv;
    if (!is_integral(a) || !is_integral(x - rep1.M() * a))
        throw Error(ErrorCode::InvalidArgument, "internal: intertwiner decomposition failed", to_string(x));
    RatVec shift = rep1.beta() - rep2.beta();
    RepMatrix iota(rep1.dim());
    iota.labels = rep2.labels();
    const auto& reps = rep1.basis().reps();
    for (std::size_t j = 0; j < reps.size(); ++j) {
        std::size_t i = rep2.basis().index_of(reps[j] + shift);
        iota(i, j) = CycScalar::e(dot(a, reps[j]));
    }
    out.isomorphic = true;
    out.intertwiner = iota;
    return out;
}

PiRepCheck check_pi_rep(const PiRep& rep, const std::vector<IntVec>& lambdas, const std::vector<IntVec>& mus) {
    PiRepCheck c;
    std::size_t n = rep.M().rows();
    for (const auto& l : lambdas)
        for (const auto& m : mus) {
            RationalMatrix k(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) k(i, j) = Rat(2 * l[i] * m[j]);
            RepMatrix lhs = pi_matrix(rep, HeisenbergElement::translation(l, {})) *
                            pi_matrix(rep, HeisenbergElement::translation({}, m)) *
                            pi_matrix(rep, HeisenbergElement::central(k));
            RepMatrix rhs = pi_matrix(rep, HeisenbergElement::translation({}, m)) *
                            pi_matrix(rep, HeisenbergElement::translation(l, {}));
            if (lhs != rhs && c.commutation) {
                c.commutation = false;
                c.witness = "commutation at lambda=" + to_string(to_rat(l)) + " mu=" + to_string(to_rat(m));
            }
        }
    std::vector<RepMatrix> gens;
    for (std::size_t i = 0; i < n; ++i) {
        gens.push_back(pi_matrix(rep, HeisenbergElement::translation(unit_int(n, i), {})));
        gens.push_back(pi_matrix(rep, HeisenbergElement::translation({}, unit_int(n, i))));
        RationalMatrix k(n, n);
        k(i, i) = 1;
        gens.push_back(pi_matrix(rep, HeisenbergElement::central(k)));
    }
    for (const auto& l : lambdas) gens.push_back(pi_matrix(rep, HeisenbergElement::translation(l, {})));
    for (const auto& m : mus) gens.push_back(pi_matrix(rep, HeisenbergElement::translation({}, m)));
    for (const auto& g : gens)
        if (!g.is_unitary()) {
            c.unitary = false;
            if (c.witness.empty()) c.witness = "non-unitary generator";
        }

    // eigenvalues of [0, e_i, 0] on 𝔢_r are e(β_i + r_i)
    const auto& reps = rep.basis().reps();
    std::vector<RatVec> systems;
    for (const auto& r : reps) {
        RatVec sys(n);
        for (std::size_t i = 0; i < n; ++i) sys[i] = frac(rep.beta()[i] + r[i]);
        systems.push_back(sys);
    }
    std::sort(systems.begin(), systems.end(), lex_less);
    for (std::size_t i = 1; i < systems.size(); ++i)
        if (systems[i] == systems[i - 1]) {
            c.eigen_distinct = false;
            if (c.witness.empty()) c.witness = "repeated eigenvalue system " + to_string(systems[i]);
        }

    std::vector<bool> seen(reps.size(), false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        std::size_t j = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < n; ++i) {
            RatVec t = reps[j] + rep.M() * to_rat(unit_int(n, i));
            std::size_t k = rep.basis().index_of(t);
            if (!seen[k]) {
                seen[k] = true;
                queue.push_back(k);
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        c.transitive = false;
        if (c.witness.empty()) c.witness = "eigenlines not permuted transitively";
    }
    return c;
}

std::size_t OrbitAB::index_of(const ABPair& p) const {
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i] == p) return i;
    throw Error(ErrorCode::NotInGroup, "pair is not in the orbit", to_string(p.alpha) + ";" + to_string(p.beta));
}

ABPair canonical_pair(const IndexSplit& s, const RatVec& alpha, const RatVec& beta) {
    RationalMatrix inv = s.M_frac.inverse();
    return {reduce_box(s.M_frac, inv, alpha), reduce_box(s.M_frac, inv, beta)};
}

OrbitAB orbit_alpha_beta(const RationalMatrix& M, const RatVec& alpha, const RatVec& beta) {
    require_positive_definite(M);
    OrbitAB o;
    o.M = M;
    o.split = split_index(M);
    std::size_t n = M.rows();
    RatVec a = alpha.empty() ? RatVec(n, Rat(0)) : alpha;
    RatVec b = beta.empty() ? RatVec(n, Rat(0)) : beta;
    if (a.size() != n || b.size() != n) throw Error(ErrorCode::DimensionMismatch, "alpha/beta have wrong length");
    std::vector<ABPair> found{canonical_pair(o.split, a, b)};
    std::deque<ABPair> queue{found.front()};
    while (!queue.empty()) {
        ABPair p = queue.front();
        queue.pop_front();
        // (α,β)·ᵗS = (−β, α), (α,β)·ᵗT = (α+β, β)
        for (const ABPair& q : {canonical_pair(o.split, -p.beta, p.alpha),
                                canonical_pair(o.split, p.alpha + p.beta, p.beta)}) {
            if (std::find(found.begin(), found.end(), q) == found.end()) {
                found.push_back(q);
                queue.push_back(q);
            }
        }
    }
    std::sort(found.begin(), found.end(), pair_less);
    o.pairs = found;
    return o;
}

IntVec lift_to_index_image(const IndexSplit& s, const RatVec& r) {
    std::size_t n = s.M.rows();
    RationalMatrix UDz = s.smith.U;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) UDz(k, i) /= Rat(s.b[i]);
    RatVec w = UDz.inverse() * r;
    if (!is_integral(w)) throw Error(ErrorCode::NotInGroup, "vector is not in M Z^N + Z^N", to_string(r));
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (s.b[i] == 1) {
            x[i] = 0;
            continue;
        }
        Int inv;
        mpz_invert(inv.get_mpz_t(), s.a[i].get_mpz_t(), s.b[i].get_mpz_t());
        Int t = w[i].get_num() * inv;
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), s.b[i].get_mpz_t());
        x[i] = Rat(t);
    }
    RatVec l = s.smith.V.inverse() * x;
    IntVec out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = l[i].get_num();
    return out;
}

namespace {

void require_admissible(const DiscGroup& G) {
    if (!is_admissible_index(G.split))
        throw Error(ErrorCode::NotAdmissible, "index is not admissible", G.M.to_string());
}

std::vector<std::string> disc_labels(const DiscGroup& G) {
    std::vector<std::string> l;
    for (const auto& r : G.reps) l.push_back(to_string(r));
    return l;
}

}  // namespace

RepMatrix rho_M_matrix(const DiscGroup& G, const Generator& g) {
    require_admissible(G);
    std::size_t d = G.reps.size();
    std::size_t n = G.M.rows();
    RepMatrix R(d);
    R.labels = disc_labels(G);
    switch (g.kind) {
        case Generator::Kind::S: {
            CycScalar s = CycScalar::inv_sqrt(G.order);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    R(i, j) = s * CycScalar::e(-bilinear(G.split.M_inv, G.reps[i], G.reps[j]));
            break;
        }
        case Generator::Kind::T:
            for (std::size_t i = 0; i < d; ++i) R(i, i) = CycScalar::e(qvalue(G, G.reps[i]));
            break;
        case Generator::Kind::Heisenberg: {
            check_len(g.h.lambda, n, "lambda");
            check_len(g.h.mu, n, "mu");
            RatVec ml = G.M * to_rat(or_zero(g.h.lambda, n));
            RatVec mu = to_rat(or_zero(g.h.mu, n));
            Rat k = half_trace(G.M, g.h.kappa);
            for (std::size_t j = 0; j < d; ++j)
                R(G.index_of(G.reps[j] + ml), j) = CycScalar::e(k + dot(G.reps[j], mu));
            break;
        }
    }
    return R;
}

RepMatrix rho_M_weyl(const DiscGroup& G, const IntVec& lambda, const IntVec& mu) {
    RepMatrix P = rho_M_matrix(G, Generator::heisenberg(HeisenbergElement::translation(lambda, mu)));
    return P * CycScalar::e(Rat(1, 2) * bilinear(G.M, to_rat(lambda), to_rat(mu)));
}

RhoRelationsReport rho_relations_report(const DiscGroup& G) {
    require_admissible(G);
    RhoRelationsReport rep;
    std::size_t d = G.reps.size(), n = G.M.rows();
    RepMatrix S = rho_M_matrix(G, Generator::S());
    RepMatrix T = rho_M_matrix(G, Generator::T());

    CycScalar sum;
    for (const auto& nu : G.reps) sum += CycScalar::e(qvalue(G, nu));
    rep.gauss = CycScalar::inv_sqrt(G.order) * sum;
    rep.gauss_unit = rep.gauss * rep.gauss.conj() == CycScalar(1);
    if (!rep.gauss_unit) rep.witnesses.push_back("|G(M)| != 1");

    RepMatrix ST = S * T;
    RepMatrix S2 = S * S;
    rep.st3 = ST * ST * ST == S2 * rep.gauss;
    if (!rep.st3) rep.witnesses.push_back("(ST)^3 != G(M) S^2");

    auto pat = S2.monomial_pattern();
    rep.s2_permutation = !pat.empty();
    for (std::size_t j = 0; j < d && rep.s2_permutation; ++j) {
        if (pat[j] != G.index_of(-G.reps[j])) rep.s2_permutation = false;
        const CycScalar& c = S2(pat[j], j);
        if (!(c * c.conj() == CycScalar(1))) rep.s2_permutation = false;
    }
    if (!rep.s2_permutation) rep.witnesses.push_back("S^2 is not a phase permutation nu -> -nu");

    RepMatrix Sinv = S.adjoint(), Tinv = T.adjoint();
    rep.conj_S = rep.conj_T = true;
    for (int which = 0; which < 2; ++which)
        for (std::size_t i = 0; i < n; ++i) {
            IntVec l = which == 0 ? unit_int(n, i) : zero_int(n);
            IntVec m = which == 0 ? zero_int(n) : unit_int(n, i);
            auto cS = scalar_ratio(S * rho_M_weyl(G, l, m) * Sinv, rho_M_weyl(G, m, neg(l)));
            if (cS) {
                rep.conj_S_factors.push_back(*cS);
            } else {
                rep.conj_S = false;
                rep.witnesses.push_back("S-conjugation fails at lambda=" + to_string(to_rat(l)) +
                                        " mu=" + to_string(to_rat(m)));
            }
            auto cT = scalar_ratio(T * rho_M_weyl(G, l, m) * Tinv, rho_M_weyl(G, l, add(l, m)));
            if (!cT) {
                rep.conj_T = false;
                rep.witnesses.push_back("T-conjugation fails at lambda=" + to_string(to_rat(l)) +
                                        " mu=" + to_string(to_rat(m)));
            }
        }
    return rep;
}

RepMatrix rho_induced_matrix(const OrbitAB& orbit, const Generator& g) {
    if (!is_admissible_index(orbit.split))
        throw Error(ErrorCode::NotAdmissible, "index is not admissible", orbit.M.to_string());
    std::vector<PiRep> reps;
    for (const auto& p : orbit.pairs) reps.emplace_back(orbit.M, p.alpha, p.beta);
    std::size_t d = reps.front().dim();
    std::size_t nb = reps.size();
    auto labels = [&]() {
        std::vector<std::string> l;
        for (std::size_t b = 0; b < nb; ++b)
            for (const auto& x : reps[b].labels())
                l.push_back(to_string(orbit.pairs[b].alpha) + ";" + to_string(orbit.pairs[b].beta) + "|" + x);
        return l;
    };
    if (g.kind == Generator::Kind::Heisenberg) {
        std::vector<RepMatrix> blocks;
        for (const auto& r : reps) blocks.push_back(pi_matrix(r, g.h));
        RepMatrix R = block_diagonal(blocks);
        R.labels = labels();
        return R;
    }
    const auto& basis = reps.front().basis().reps();
    std::vector<IntVec> lifts;
    for (const auto& r : basis) lifts.push_back(lift_to_index_image(orbit.split, r));

    RepMatrix phi0(d);
    if (g.kind == Generator::Kind::T) {
        for (std::size_t j = 0; j < d; ++j)
            phi0(j, j) = CycScalar::e(Rat(1, 2) * gram_eval(orbit.M, to_rat(lifts[j])));
    } else {
        CycScalar s = CycScalar::inv_sqrt(Int(static_cast<unsigned long>(d)));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) phi0(i, j) = s * CycScalar::e(-dot(basis[i], to_rat(lifts[j])));
    }

    RepMatrix R(nb * d);
    R.labels = labels();
    for (std::size_t b = 0; b < nb; ++b) {
        const ABPair& p = orbit.pairs[b];
        ABPair raw = g.kind == Generator::Kind::T ? ABPair{p.alpha - p.beta, p.beta} : ABPair{p.beta, -p.alpha};
        ABPair can = canonical_pair(orbit.split, raw.alpha, raw.beta);
        std::size_t q = orbit.index_of(can);
        PiIsomorphism iso = pi_isomorphism(PiRep(orbit.M, raw.alpha, raw.beta), reps[q]);
        if (!iso.isomorphic) throw Error(ErrorCode::InvalidArgument, "internal: orbit pair not isomorphic");
        RepMatrix blk = *iso.intertwiner * phi0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) R(q * d + i, b * d + j) = blk(i, j);
    }
    return R;
}

InducedReport rho_induced_report(const OrbitAB& orbit) {
    InducedReport rep;
    std::size_t n = orbit.M.rows();
    std::vector<PiRep> reps;
    for (const auto& p : orbit.pairs) reps.emplace_back(orbit.M, p.alpha, p.beta);
    auto weyl = [&](const IntVec& l, const IntVec& m) {
        std::vector<RepMatrix> blocks;
        for (const auto& r : reps) blocks.push_back(pi_weyl(r, l, m));
        return block_diagonal(blocks);
    };
    RepMatrix S = rho_induced_matrix(orbit, Generator::S());
    RepMatrix T = rho_induced_matrix(orbit, Generator::T());
    rep.unitary = S.is_unitary() && T.is_unitary();
    if (!rep.unitary) rep.witnesses.push_back("S or T not unitary");
    RepMatrix Sinv = S.adjoint(), Tinv = T.adjoint();
    rep.conjugation = true;
    for (int which = 0; which < 2; ++which)
        for (std::size_t i = 0; i < n; ++i) {
            IntVec l = which == 0 ? unit_int(n, i) : zero_int(n);
            IntVec m = which == 0 ? zero_int(n) : unit_int(n, i);
            if (S * weyl(l, m) * Sinv != weyl(m, neg(l)) || T * weyl(l, m) * Tinv != weyl(l, add(l, m))) {
                rep.conjugation = false;
                rep.witnesses.push_back("conjugation fails at lambda=" + to_string(to_rat(l)) +
                                        " mu=" + to_string(to_rat(m)));
            }
        }
    RepMatrix ST = S * T;
    RepMatrix X = ST * ST * ST * (S * S).adjoint();
    std::size_t d = reps.front().dim();
    rep.st3_block_scalar = true;
    for (std::size_t i = 0; i < X.dim() && rep.st3_block_scalar; ++i)
        for (std::size_t j = 0; j < X.dim(); ++j) {
            if (i != j && !X(i, j).is_zero()) rep.st3_block_scalar = false;
            if (i == j && X(i, i) != X((i / d) * d, (i / d) * d)) rep.st3_block_scalar = false;
        }
    if (!rep.st3_block_scalar) rep.witnesses.push_back("(ST)^3 S^-2 is not block scalar");
    return rep;
}

}  // namespace jacobiq
