#include "jacobiq/theta.hpp"

#include <algorithm>
#include <cmath>

#include "jacobiq/lattice.hpp"

namespace jacobiq {

namespace {

Complex e_num(Complex x) { return std::exp(Complex(0, 2 * M_PI) * x); }

void require_admissible(const IndexSplit& s) {
    if (!is_admissible_index(s)) throw Error(ErrorCode::NotAdmissible, "index is not admissible", s.M.to_string());
}

Complex gram_num(const RationalMatrix& M, const ComplexVec& x, const ComplexVec& y) {
    Complex s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) s += M(i, j).get_d() * x[i] * y[j];
    return s;
}

}  // namespace

CycScalar FourierExpansion::coeff(const Rat& m, const RatVec& r, std::size_t label) const {
    auto it = terms.find({m, r});
    if (it == terms.end()) return CycScalar();
    return it->second[label];
}

void FourierExpansion::add(const Rat& m, const RatVec& r, std::size_t label, const CycScalar& c) {
    auto& v = terms[{m, r}];
    if (v.empty()) v.assign(width(), CycScalar());
    v[label] += c;
}

void FourierExpansion::set(const Rat& m, const RatVec& r, std::size_t label, const CycScalar& c) {
    auto& v = terms[{m, r}];
    if (v.empty()) v.assign(width(), CycScalar());
    v[label] = c;
}

void FourierExpansion::prune() {
    for (auto it = terms.begin(); it != terms.end();) {
        bool zero = std::all_of(it->second.begin(), it->second.end(), [](const CycScalar& c) { return c.is_zero(); });
        it = zero ? terms.erase(it) : std::next(it);
    }
}

bool FourierExpansion::is_zero() const {
    for (const auto& [k, v] : terms)
        for (const auto& c : v)
            if (!c.is_zero()) return false;
    return true;
}

bool operator==(const FourierExpansion& a, const FourierExpansion& b) {
    if (a.width() != b.width()) return false;
    FourierExpansion x = a, y = b;
    x.prune();
    y.prune();
    if (x.terms.size() != y.terms.size()) return false;
    auto it = y.terms.begin();
    for (const auto& [k, v] : x.terms) {
        if (!(k == it->first)) return false;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != it->second[i]) return false;
        ++it;
    }
    return true;
}

FourierExpansion theta_component(const RationalMatrix& M, const RatVec& nu, const Rat& prec) {
    require_positive_definite(M);
    IndexSplit s = split_index(M);
    require_admissible(s);
    FourierExpansion f;
    f.N = M.rows();
    f.prec = prec;
    for (const auto& p : enumerate_coset_points(s, nu, prec)) f.add(p.exponent, p.xi, 0, CycScalar(1));
    return f;
}

FourierExpansion theta_vector(const RationalMatrix& M, const Rat& prec) {
    DiscGroup G = disc_group(M);
    require_admissible(G.split);
    FourierExpansion f;
    f.N = M.rows();
    f.prec = prec;
    f.labels.clear();
    for (const auto& nu : G.reps) f.labels.push_back(to_string(nu));
    for (std::size_t i = 0; i < G.reps.size(); ++i)
        for (const auto& p : enumerate_coset_points(G.split, G.reps[i], prec)) f.add(p.exponent, p.xi, i, CycScalar(1));
    return f;
}

FourierExpansion theta_shifted(const RationalMatrix& M, const RatVec& nu, const RatVec& alpha, const RatVec& beta,
                               const Rat& prec) {
    require_positive_definite(M);
    IndexSplit s = split_index(M);
    require_admissible(s);
    std::size_t n = M.rows();
    RatVec a = alpha.empty() ? RatVec(n, Rat(0)) : alpha;
    RatVec b = beta.empty() ? RatVec(n, Rat(0)) : beta;
    if (nu.size() != n || a.size() != n || b.size() != n)
        throw Error(ErrorCode::DimensionMismatch, "vector has wrong length");
    CosetSpace space(s, CosetSpace::Kind::Disc);
    if (!space.contains(nu)) throw Error(ErrorCode::NotInGroup, "nu is not in M Z^N + Z^N", to_string(nu));
    FourierExpansion f;
    f.N = n;
    f.prec = prec;
    if (prec < 0) return f;
    RatVec shift = nu + a;
    RationalMatrix Q = congruent(s.M_inv, s.M_Z);
    RatVec c = -(s.M_Z.inverse() * shift);
    RatVec Minv_beta = s.M_inv * b;
    enumerate_ellipsoid(Q, c, Rat(2) * prec, [&](const IntVec& y, const Rat&) {
        RatVec R = shift + s.M_Z * to_rat(y);
        f.add(Rat(1, 2) * gram_eval(s.M_inv, R), R, 0, CycScalar::e(dot(R, Minv_beta)));
    });
    return f;
}

Evaluation evaluate_expansion(const FourierExpansion& f, Complex tau, const ComplexVec& z) {
    if (!(tau.imag() > 0)) throw Error(ErrorCode::NotUpperHalfPlane, "Im(tau) must be positive");
    if (z.size() != f.N && !(f.terms.empty() && z.empty()))
        throw Error(ErrorCode::DimensionMismatch, "z has wrong length");
    Evaluation ev;
    ev.values.assign(f.width(), 0.0);
    ev.tail_estimate = 0;
    Rat top = f.terms.empty() ? Rat(0) : f.terms.rbegin()->first.m;
    for (const auto& [k, v] : f.terms) {
        Complex arg = k.m.get_d() * tau;
        for (std::size_t i = 0; i < k.r.size(); ++i) arg += k.r[i].get_d() * z[i];
        Complex base = e_num(arg);
        for (std::size_t l = 0; l < v.size(); ++l) {
            if (v[l].is_zero()) continue;
            Complex t = v[l].to_complex() * base;
            ev.values[l] += t;
            if (k.m == top) ev.tail_estimate = std::max(ev.tail_estimate, std::abs(t));
        }
    }
    return ev;
}

double modularity_residual(const RationalMatrix& M, const Rat& prec, Complex tau, const ComplexVec& z,
                           const Generator& gen) {
    if (!(tau.imag() > 0)) throw Error(ErrorCode::NotUpperHalfPlane, "Im(tau) must be positive");
    DiscGroup G = disc_group(M);
    std::size_t n = M.rows();
    if (z.size() != n) throw Error(ErrorCode::DimensionMismatch, "z has wrong length");
    FourierExpansion th = theta_vector(M, prec);
    RepMatrix rho = rho_M_matrix(G, gen);
    ComplexVec rhs = rho.apply(evaluate_expansion(th, tau, z).values);
    ComplexVec lhs;
    switch (gen.kind) {
        case Generator::Kind::T:
            lhs = evaluate_expansion(th, tau + 1.0, z).values;
            break;
        case Generator::Kind::S: {
            Complex t2 = -1.0 / tau;
            ComplexVec z2(n);
            for (std::size_t i = 0; i < n; ++i) z2[i] = z[i] / tau;
            lhs = evaluate_expansion(th, t2, z2).values;
            // θ(−1/τ, z/τ) = (τ/i)^{N/2} e(½M[z]/τ) ρ(S) θ(τ, z)
            Complex factor = std::pow(tau / Complex(0, 1), 0.5 * static_cast<double>(n)) *
                             e_num(0.5 * gram_num(M, z, z) / tau);
            for (auto& x : rhs) x *= factor;
            break;
        }
        case Generator::Kind::Heisenberg: {
            const auto& h = gen.h;
            ComplexVec l(n, 0.0), m(n, 0.0), z2(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (!h.lambda.empty()) l[i] = h.lambda[i].get_d();
                if (!h.mu.empty()) m[i] = h.mu[i].get_d();
                z2[i] = z[i] - l[i] * tau + m[i];
            }
            Rat ht = 0;
            if (h.kappa.rows() == n)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) ht += M(i, j) * h.kappa(j, i);
            ht /= 2;
            Complex arg = 0.5 * gram_num(M, l, l) * tau - gram_num(M, l, z) - gram_num(M, l, m) + ht.get_d();
            lhs = evaluate_expansion(th, tau, z2).values;
            for (auto& x : lhs) x *= e_num(arg);
            break;
        }
    }
    double r = 0;
    for (std::size_t i = 0; i < lhs.size(); ++i) r = std::max(r, std::abs(lhs[i] - rhs[i]));
    return r;
}

}  // namespace jacobiq
