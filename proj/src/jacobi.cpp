#include "jacobiq/jacobi.hpp"

#include <algorithm>
#include <set>

#include "jacobiq/lattice.hpp"

namespace jacobiq {

namespace {

std::string key_string(const Rat& m, const RatVec& r, std::size_t label) {
    return "m=" + to_string(m) + " r=" + to_string(r) + " label=" + std::to_string(label);
}

// Disc index of r − α_p, if r − α_p ∈ Mℤ^N + ℤ^N.
std::optional<std::size_t> disc_index(const JacobiType& t, const RatVec& r, std::size_t p) {
    RatVec x = r - t.orbit().pairs[p].alpha;
    if (!t.disc().space.contains(x)) return std::nullopt;
    if (t.kind() == JacobiType::Kind::Scalar && !is_integral(x)) return std::nullopt;
    return t.disc().index_of(x);
}

struct Image {
    Rat m;
    RatVec r;
    std::size_t label;
    CycScalar factor;
};

// Relation 1 image of (m, r) at label (μ, p) under λ.
Image relation1(const JacobiType& t, const Rat& m, const RatVec& r, std::size_t mu, std::size_t p, const IntVec& lambda) {
    const RationalMatrix& M = t.M();
    RatVec l = to_rat(lambda);
    RatVec ml = M * l;
    Image im;
    im.m = m + Rat(1, 2) * gram_eval(M, l) + dot(r, l);
    im.r = r + ml;
    if (t.kind() == JacobiType::Kind::Scalar) {
        im.label = 0;
        im.factor = CycScalar(1);
    } else {
        std::size_t mu2 = t.disc().index_of(t.disc().reps[mu] + ml);
        im.label = t.label(mu2, p);
        im.factor = CycScalar::e(dot(t.orbit().pairs[p].beta, l));
    }
    return im;
}

// Relation 2 image of (m, r) at label (μ, p).
Image relation2(const JacobiType& t, const Rat& k, const Rat& m, const RatVec& r, std::size_t mu, std::size_t p) {
    Image im;
    im.m = m;
    im.r = -r;
    CycScalar w = relation2_weight_factor(k);
    if (t.kind() == JacobiType::Kind::Scalar) {
        im.label = 0;
        im.factor = w;
        return im;
    }
    const ABPair& pp = t.orbit().pairs[p];
    ABPair neg = canonical_pair(t.orbit().split, -pp.alpha, -pp.beta);
    RatVec tt = neg.alpha + pp.alpha, u = neg.beta + pp.beta;
    std::size_t p2 = t.orbit().index_of(neg);
    std::size_t mu2 = t.disc().index_of(-t.disc().reps[mu] - tt);
    im.label = t.label(mu2, p2);
    Rat n = Rat(static_cast<long>(t.M().rows()));
    im.factor = w * CycScalar::e(-n / 4) * CycScalar::e(-dot(r, t.disc().split.M_inv * u));
    return im;
}

std::pair<std::size_t, std::size_t> split_label(const JacobiType& t, std::size_t label, const RatVec& r) {
    if (t.kind() == JacobiType::Kind::Scalar) {
        auto mu = disc_index(t, r, 0);
        return {mu ? *mu : t.disc().reps.size(), 0};
    }
    std::size_t d = t.disc().reps.size();
    return {label % d, label / d};
}

// Minimal ½M^{-1}[ν + α + Mλ] and the first minimizing lift ν + Mλ.
std::pair<Rat, RatVec> minimal_lift(const RationalMatrix& M, const RationalMatrix& Minv, const RatVec& nu,
                                    const RatVec& alpha) {
    Rat dist;
    auto vs = closest_vectors(M, -(Minv * (nu + alpha)), &dist);
    return {dist / 2, nu + M * to_rat(vs.front())};
}

}  // namespace

JacobiType JacobiType::scalar(const RationalMatrix& M) {
    require_positive_definite(M);
    if (!M.is_integral()) throw Error(ErrorCode::InvalidArgument, "scalar type needs an integral index", M.to_string());
    JacobiType t;
    t.kind_ = Kind::Scalar;
    t.disc_ = disc_group(M);
    if (!is_admissible_index(t.disc_.split))
        throw Error(ErrorCode::NotAdmissible, "index is not admissible", M.to_string());
    t.orbit_ = orbit_alpha_beta(M, {}, {});
    t.mod_index_ = CosetSpace(t.disc_.split, CosetSpace::Kind::ModIndex);
    return t;
}

JacobiType JacobiType::theta_tensor(const RationalMatrix& M, const RatVec& alpha, const RatVec& beta) {
    JacobiType t;
    t.kind_ = Kind::ThetaTensor;
    t.disc_ = disc_group(M);
    if (!is_admissible_index(t.disc_.split))
        throw Error(ErrorCode::NotAdmissible, "index is not admissible", M.to_string());
    t.orbit_ = orbit_alpha_beta(M, alpha, beta);
    t.mod_index_ = CosetSpace(t.disc_.split, CosetSpace::Kind::ModIndex);
    return t;
}

std::size_t JacobiType::width() const {
    return kind_ == Kind::Scalar ? 1 : disc_.reps.size() * orbit_.pairs.size();
}

std::size_t JacobiType::label(std::size_t mu_index, std::size_t pair_index) const {
    return kind_ == Kind::Scalar ? 0 : pair_index * disc_.reps.size() + mu_index;
}

std::vector<std::string> JacobiType::labels() const {
    if (kind_ == Kind::Scalar) return {""};
    std::vector<std::string> l;
    for (const auto& p : orbit_.pairs)
        for (const auto& nu : disc_.reps) l.push_back(to_string(p.alpha) + ";" + to_string(p.beta) + "|" + to_string(nu));
    return l;
}

RationalMatrix JacobiType::kappa_matrix() const {
    if (kind_ == Kind::Scalar) return RationalMatrix(M().rows(), M().cols());
    return Rat(1, 2) * M();
}

CycScalar relation2_weight_factor(const Rat& k) { return CycScalar::e(Rat(1, 4) * 2 * k); }

JacobiFormData symmetrize_expansion(const FourierExpansion& seed, const Rat& k, const JacobiType& type) {
    if (seed.width() != type.width())
        throw Error(ErrorCode::DimensionMismatch, "seed width does not match the type");
    if (seed.N != type.M().rows() && !seed.terms.empty())
        throw Error(ErrorCode::DimensionMismatch, "seed rank does not match the index");
    const RationalMatrix& M = type.M();
    const RationalMatrix& Minv = type.disc().split.M_inv;
    JacobiFormData out{k, type, FourierExpansion{}};
    out.expansion.N = M.rows();
    out.expansion.prec = seed.prec;
    out.expansion.labels = type.labels();
    std::set<std::pair<TermKey, std::size_t>> assigned;

    auto assign = [&](const Image& im, const CycScalar& v) {
        if (im.m > seed.prec) return;
        auto key = std::make_pair(TermKey{im.m, im.r}, im.label);
        if (assigned.count(key)) {
            if (out.expansion.coeff(im.m, im.r, im.label) != v)
                throw Error(ErrorCode::InconsistentSeed, "seed violates the Fourier-coefficient relations",
                            key_string(im.m, im.r, im.label));
            return;
        }
        assigned.insert(key);
        out.expansion.set(im.m, im.r, im.label, v);
    };

    for (const auto& [key, vec] : seed.terms) {
        for (std::size_t l = 0; l < vec.size(); ++l) {
            if (vec[l].is_zero()) continue;
            const Rat& m = key.m;
            const RatVec& r = key.r;
            auto [mu, p] = split_label(type, l, r);
            auto supp = disc_index(type, r, p);
            if (!supp || *supp != mu)
                throw Error(ErrorCode::InconsistentSeed, "seed coefficient outside the support of its label",
                            key_string(m, r, l));
            Rat disc_part = m - Rat(1, 2) * gram_eval(Minv, r);
            if (disc_part < 0)
                throw Error(ErrorCode::InconsistentSeed, "seed violates positivity", key_string(m, r, l));
            // m + ½M[λ] + ᵗrλ = disc_part + ½M[λ + M^{-1}r]
            enumerate_ellipsoid(M, -(Minv * r), Rat(2) * (seed.prec - disc_part), [&](const IntVec& lam, const Rat&) {
                Image a = relation1(type, m, r, mu, p, lam);
                CycScalar va = vec[l] * a.factor;
                assign(a, va);
                auto [mu_a, p_a] = split_label(type, a.label, a.r);
                Image b = relation2(type, k, a.m, a.r, mu_a, p_a);
                assign(b, va * b.factor);
            });
        }
    }
    out.expansion.prune();
    return out;
}

bool satisfies_fourier_relations(const JacobiFormData& phi, std::string* witness, bool check_relation2) {
    const JacobiType& t = phi.type;
    const auto& f = phi.expansion;
    std::size_t n = t.M().rows();
    std::vector<IntVec> lambdas;
    for (std::size_t i = 0; i < n; ++i)
        for (int s : {1, -1}) {
            IntVec l(n, Int(0));
            l[i] = s;
            lambdas.push_back(l);
        }
    auto fail = [&](const std::string& w) {
        if (witness) *witness = w;
        return false;
    };
    for (const auto& [key, vec] : f.terms)
        for (std::size_t l = 0; l < vec.size(); ++l) {
            if (vec[l].is_zero()) continue;
            auto [mu, p] = split_label(t, l, key.r);
            auto supp = disc_index(t, key.r, p);
            if (!supp || *supp != mu) return fail("support " + key_string(key.m, key.r, l));
            for (const auto& lam : lambdas) {
                Image a = relation1(t, key.m, key.r, mu, p, lam);
                if (a.m <= f.prec && f.coeff(a.m, a.r, a.label) != vec[l] * a.factor)
                    return fail("relation 1 at " + key_string(key.m, key.r, l));
            }
            if (!check_relation2) continue;
            Image b = relation2(t, phi.k, key.m, key.r, mu, p);
            if (f.coeff(b.m, b.r, b.label) != vec[l] * b.factor)
                return fail("relation 2 at " + key_string(key.m, key.r, l));
        }
    return true;
}

bool ComponentVector::operator==(const ComponentVector& o) const {
    if (M != o.M || prec != o.prec || nus != o.nus || precs != o.precs || h.size() != o.h.size()) return false;
    for (std::size_t i = 0; i < h.size(); ++i) {
        std::map<Rat, CycScalar> a, b;
        for (const auto& [n, c] : h[i])
            if (!c.is_zero()) a[n] = c;
        for (const auto& [n, c] : o.h[i])
            if (!c.is_zero()) b[n] = c;
        if (a.size() != b.size()) return false;
        auto it = b.begin();
        for (const auto& [n, c] : a) {
            if (n != it->first || c != it->second) return false;
            ++it;
        }
    }
    return true;
}

std::vector<ComponentLift> component_lifts(const JacobiType& type) {
    const RationalMatrix& Minv = type.disc().split.M_inv;
    std::vector<ComponentLift> out;
    for (const auto& nu : type.mod_index().reps()) {
        std::optional<ComponentLift> best;
        for (std::size_t p = 0; p < type.orbit().pairs.size(); ++p) {
            auto [e, r] = minimal_lift(type.M(), Minv, nu, type.orbit().pairs[p].alpha);
            if (!best || e < best->shift) best = ComponentLift{e, p, r};
        }
        out.push_back(*best);
    }
    return out;
}

namespace {

JacobiFormData reconstruct_unchecked(const ComponentVector& h, const Rat& k, const JacobiType& type, const Rat& prec) {
    JacobiFormData out{k, type, FourierExpansion{}};
    out.expansion.N = type.M().rows();
    out.expansion.prec = prec;
    out.expansion.labels = type.labels();
    const auto& G = type.disc();
    for (std::size_t j = 0; j < G.reps.size(); ++j) {
        std::size_t nu = type.mod_index().index_of(G.reps[j]);
        const auto& hn = h.h[nu];
        if (hn.empty()) continue;
        Rat nmin = hn.begin()->first;
        for (std::size_t p = 0; p < type.orbit().pairs.size(); ++p) {
            const ABPair& pp = type.orbit().pairs[p];
            FourierExpansion th = theta_shifted(type.M(), G.reps[j], pp.alpha, pp.beta, prec - nmin);
            for (const auto& [key, v] : th.terms)
                for (const auto& [n, c] : hn) {
                    if (n > h.precs[nu] || n + key.m > prec) break;
                    if (c.is_zero()) continue;
                    out.expansion.add(n + key.m, key.r, type.label(j, p), c * v[0]);
                }
        }
    }
    out.expansion.prune();
    return out;
}

void require_shape(const ComponentVector& h, const JacobiType& type) {
    if (h.M != type.M()) throw Error(ErrorCode::DimensionMismatch, "component index differs from the type index");
    if (h.h.size() != type.mod_index().size() || h.precs.size() != h.h.size())
        throw Error(ErrorCode::DimensionMismatch, "wrong number of components");
}

}  // namespace

ComponentVector component_template(const JacobiType& type, const Rat& prec) {
    ComponentVector h;
    h.M = type.M();
    h.prec = prec;
    h.nus = type.mod_index().reps();
    h.h.resize(h.nus.size());
    for (const auto& l : component_lifts(type)) h.precs.push_back(prec - l.shift);
    return h;
}

JacobiFormData theta_reconstruct(const ComponentVector& h, const Rat& k, const JacobiType& type, const Rat& prec) {
    require_shape(h, type);
    auto lifts = component_lifts(type);
    for (std::size_t i = 0; i < lifts.size(); ++i)
        if (prec > h.precs[i] + lifts[i].shift)
            throw Error(ErrorCode::PrecisionMismatch, "components are truncated below the requested precision",
                        "nu=" + to_string(h.nus[i]) + " max prec " + to_string(h.precs[i] + lifts[i].shift));
    return reconstruct_unchecked(h, k, type, prec);
}

ComponentVector theta_decompose(const JacobiFormData& phi) {
    const JacobiType& t = phi.type;
    const auto& f = phi.expansion;
    if (f.width() != t.width()) throw Error(ErrorCode::DimensionMismatch, "expansion width does not match the type");
    const RationalMatrix& Minv = t.disc().split.M_inv;
    ComponentVector h = component_template(t, f.prec);
    auto lifts = component_lifts(t);
    for (std::size_t i = 0; i < h.nus.size(); ++i) {
        const ComponentLift& l = lifts[i];
        const ABPair& pp = t.orbit().pairs[l.pair];
        RatVec R = l.lift + pp.alpha;
        std::size_t label = t.label(t.disc().index_of(l.lift), l.pair);
        CycScalar phase = CycScalar::e(-dot(R, Minv * pp.beta));
        for (const auto& [key, v] : f.terms) {
            if (key.r != R || v[label].is_zero()) continue;
            h.h[i][key.m - l.shift] = v[label] * phase;
        }
    }
    // every stored coefficient must be reproduced by the components
    JacobiFormData back = reconstruct_unchecked(h, phi.k, t, f.prec);
    std::set<TermKey> keys;
    for (const auto& [k, v] : f.terms) keys.insert(k);
    for (const auto& [k, v] : back.expansion.terms) keys.insert(k);
    for (const auto& key : keys)
        for (std::size_t l = 0; l < t.width(); ++l)
            if (f.coeff(key.m, key.r, l) != back.expansion.coeff(key.m, key.r, l))
                throw Error(ErrorCode::InconsistentExpansion, "coefficients are not of theta-decomposition shape",
                            key_string(key.m, key.r, l));
    return h;
}

Rat vanishing_bound(const Rat& k, const RationalMatrix& M) { return k / 12 + 1 + rd(M) / 2; }

Rat vv_vanishing_bound(const Rat& k) { return k / 12 + 1; }

VanishingReport certify_vanishing(const JacobiFormData& phi) {
    VanishingReport rep;
    rep.bound = vanishing_bound(phi.k, phi.type.M());
    if (phi.expansion.prec < rep.bound)
        throw Error(ErrorCode::InsufficientPrecision, "expansion precision is below the vanishing bound",
                    to_string(rep.bound));
    for (const auto& [key, v] : phi.expansion.terms) {
        if (key.m >= rep.bound) break;
        for (std::size_t l = 0; l < v.size(); ++l)
            if (!v[l].is_zero()) {
                rep.first_nonzero = key;
                rep.label = l;
                return rep;
            }
    }
    rep.vanishes = true;
    return rep;
}

bool central_character_check(const RationalMatrix& C, const RationalMatrix& M) {
    if (C.rows() != M.rows() || C.cols() != M.cols()) return false;
    for (std::size_t i = 0; i < M.rows(); ++i) {
        if (!is_integer(C(i, i) - M(i, i) / 2)) return false;
        for (std::size_t j = i + 1; j < M.rows(); ++j)
            if (!is_integer(C(i, j) + C(j, i) - M(i, j))) return false;
    }
    return true;
}

bool central_character_check(const JacobiType& type) { return central_character_check(type.kappa_matrix(), type.M()); }

bool central_character_check(const std::function<RepMatrix(const RationalMatrix&)>& rho, const RationalMatrix& M) {
    std::size_t n = M.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            RationalMatrix kappa(n, n);
            kappa(i, j) = 1;
            kappa(j, i) = 1;
            Rat half = 0;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) half += M(a, b) * kappa(b, a);
            RepMatrix R = rho(kappa);
            if (R != RepMatrix::identity(R.dim()) * CycScalar::e(half / 2)) return false;
        }
    return true;
}

}  // namespace jacobiq
