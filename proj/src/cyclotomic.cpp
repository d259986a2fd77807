#include "jacobiq/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace jacobiq {

namespace {

struct CycloTable {
    unsigned L = 1;
    unsigned phi = 1;
    std::vector<std::vector<Rat>> pow;  // x^k mod Φ_L, k < L
};

using Poly = std::vector<Int>;  // low degree first

Poly poly_divide_exact(Poly num, const Poly& den) {
    Poly q(num.size() - den.size() + 1, Int(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        Int c = num[k + den.size() - 1] / den.back();
        q[k] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    return q;
}

Poly cyclotomic_poly(unsigned L) {
    static std::map<unsigned, Poly> cache;
    auto it = cache.find(L);
    if (it != cache.end()) return it->second;
    Poly p(L + 1, Int(0));
    p[0] = -1;
    p[L] = 1;
    for (unsigned d = 1; d < L; ++d)
        if (L % d == 0) p = poly_divide_exact(p, cyclotomic_poly(d));
    cache[L] = p;
    return p;
}

std::mutex table_mutex;

std::shared_ptr<const CycloTable> table(unsigned L) {
    static std::map<unsigned, std::shared_ptr<const CycloTable>> cache;
    std::lock_guard<std::mutex> lock(table_mutex);
    auto it = cache.find(L);
    if (it != cache.end()) return it->second;
    auto t = std::make_shared<CycloTable>();
    Poly phi_poly = cyclotomic_poly(L);
    t->L = L;
    t->phi = static_cast<unsigned>(phi_poly.size() - 1);
    std::vector<Rat> cur(t->phi, Rat(0));
    cur[0] = 1;
    if (t->phi == 0) cur.clear();
    for (unsigned k = 0; k < L; ++k) {
        t->pow.push_back(cur);
        // multiply by x and reduce by the monic Φ_L
        std::vector<Rat> nxt(t->phi, Rat(0));
        Rat top = cur.empty() ? Rat(0) : cur.back();
        for (unsigned j = t->phi; j-- > 1;) nxt[j] = cur[j - 1];
        for (unsigned j = 0; j < t->phi; ++j) nxt[j] -= top * Rat(phi_poly[j]);
        cur = nxt;
    }
    cache[L] = t;
    return t;
}

unsigned lcm_u(unsigned a, unsigned b) { return std::lcm(a, b); }

std::vector<Rat> mul_reduce(const std::vector<Rat>& x, const std::vector<Rat>& y, const CycloTable& t) {
    std::vector<Rat> conv(2 * t.phi, Rat(0));
    bool any = false;
    for (unsigned i = 0; i < t.phi; ++i) {
        if (x[i] == 0) continue;
        for (unsigned j = 0; j < t.phi; ++j) {
            if (y[j] == 0) continue;
            conv[i + j] += x[i] * y[j];
            any = true;
        }
    }
    std::vector<Rat> out(t.phi, Rat(0));
    if (!any) return out;
    for (unsigned k = 0; k < conv.size(); ++k) {
        if (conv[k] == 0) continue;
        if (k < t.phi) {
            out[k] += conv[k];
            continue;
        }
        const auto& p = t.pow[k % t.L];
        for (unsigned j = 0; j < t.phi; ++j)
            if (p[j] != 0) out[j] += conv[k] * p[j];
    }
    return out;
}

bool all_zero(const std::vector<Rat>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

CycScalar::CycScalar() : a_(1, Rat(0)) {}

CycScalar::CycScalar(const Rat& q) : a_(1, q) {}

CycScalar CycScalar::e(const Rat& q) {
    Rat f = frac(q);
    unsigned L = static_cast<unsigned>(f.get_den().get_ui());
    unsigned j = static_cast<unsigned>(f.get_num().get_ui());
    auto t = table(L);
    CycScalar c;
    c.L_ = L;
    c.a_ = t->pow[j];
    return c;
}

CycScalar CycScalar::inv_sqrt(const Int& n) {
    if (n <= 0) throw Error(ErrorCode::InvalidArgument, "inv_sqrt of a nonpositive integer");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r == n) return CycScalar(Rat(Int(1), r));
    // Σ_{x mod 4n} e(x²/4n) = 2(1+i)√n
    Int m = 4 * n;
    unsigned L = static_cast<unsigned>(m.get_ui());
    auto t = table(L);
    CycScalar g;
    g.L_ = L;
    g.a_.assign(t->phi, Rat(0));
    for (unsigned long x = 0; x < L; ++x) {
        const auto& p = t->pow[(x * x) % L];
        for (unsigned k = 0; k < t->phi; ++k) g.a_[k] += p[k];
    }
    CycScalar one_minus_i = CycScalar(1) - e(Rat(1, 4));
    return g * one_minus_i * CycScalar(Rat(Int(1), m));
}

bool CycScalar::is_zero() const { return all_zero(a_); }

CycScalar CycScalar::lift_to(const CycScalar& x, unsigned L) {
    if (x.L_ == L) return x;
    auto t = table(L);
    unsigned step = L / x.L_;
    CycScalar c;
    c.L_ = L;
    c.a_.assign(t->phi, Rat(0));
    for (std::size_t j = 0; j < x.a_.size(); ++j) {
        if (x.a_[j] == 0) continue;
        const auto& p = t->pow[(j * step) % L];
        for (unsigned k = 0; k < t->phi; ++k) c.a_[k] += x.a_[j] * p[k];
    }
    return c;
}

CycScalar CycScalar::lifted(unsigned L) const {
    if (L % L_ != 0) throw Error(ErrorCode::InvalidArgument, "cannot lift to a non-multiple order");
    return lift_to(*this, L);
}

CycScalar CycScalar::operator+(const CycScalar& o) const {
    unsigned L = lcm_u(L_, o.L_);
    CycScalar x = lift_to(*this, L), y = lift_to(o, L);
    for (std::size_t j = 0; j < x.a_.size(); ++j) x.a_[j] += y.a_[j];
    return x;
}

CycScalar CycScalar::operator-() const {
    CycScalar x = *this;
    for (auto& v : x.a_) v = -v;
    return x;
}

CycScalar CycScalar::operator-(const CycScalar& o) const { return *this + (-o); }

CycScalar CycScalar::operator*(const CycScalar& o) const {
    unsigned L = lcm_u(L_, o.L_);
    auto t = table(L);
    CycScalar x = lift_to(*this, L), y = lift_to(o, L);
    CycScalar c;
    c.L_ = L;
    c.a_ = mul_reduce(x.a_, y.a_, *t);
    return c;
}

bool CycScalar::operator==(const CycScalar& o) const {
    unsigned L = lcm_u(L_, o.L_);
    return lift_to(*this, L).a_ == lift_to(o, L).a_;
}

CycScalar CycScalar::conj() const {
    auto t = table(L_);
    CycScalar c;
    c.L_ = L_;
    c.a_.assign(t->phi, Rat(0));
    for (unsigned j = 0; j < a_.size(); ++j) {
        if (a_[j] == 0) continue;
        const auto& p = t->pow[(L_ - j) % L_];
        for (unsigned k = 0; k < t->phi; ++k) c.a_[k] += a_[j] * p[k];
    }
    return c;
}

std::complex<double> CycScalar::to_complex() const {
    std::complex<double> z = 0;
    for (unsigned j = 0; j < a_.size(); ++j) {
        if (a_[j] == 0) continue;
        double ang = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(L_);
        z += a_[j].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return z;
}

std::vector<CycScalar::Term> CycScalar::terms() const {
    std::vector<Term> t;
    for (unsigned j = 0; j < a_.size(); ++j)
        if (a_[j] != 0) {
            Rat ex(j, L_);
            ex.canonicalize();
            t.push_back({ex, a_[j]});
        }
    return t;
}

CycScalar CycScalar::from_terms(const std::vector<Term>& t) {
    CycScalar c;
    for (const auto& x : t) c = c + e(x.exponent) * CycScalar(x.coeff);
    return c;
}

std::string CycScalar::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& x : terms()) {
        if (!first) os << " + ";
        first = false;
        os << x.coeff.get_str() << "*e(" << x.exponent.get_str() << ")";
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------- RepMatrix

RepMatrix::RepMatrix(std::size_t dim) : dim_(dim), e_(dim * dim) {}

RepMatrix RepMatrix::identity(std::size_t dim) {
    RepMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = CycScalar(1);
    return m;
}

RepMatrix RepMatrix::adjoint() const {
    RepMatrix m(dim_);
    m.labels = labels;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) m(j, i) = (*this)(i, j).conj();
    return m;
}

bool RepMatrix::is_unitary() const { return adjoint() * (*this) == identity(dim_); }

std::vector<std::size_t> RepMatrix::monomial_pattern() const {
    std::vector<std::size_t> img(dim_, dim_);
    std::vector<bool> hit(dim_, false);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t i = 0; i < dim_; ++i) {
            if ((*this)(i, j).is_zero()) continue;
            if (img[j] != dim_ || hit[i]) return {};
            img[j] = i;
            hit[i] = true;
        }
    for (auto x : img)
        if (x == dim_) return {};
    return img;
}

RepMatrix RepMatrix::operator*(const RepMatrix& o) const {
    if (dim_ != o.dim_) throw Error(ErrorCode::DimensionMismatch, "representation matrix sizes differ");
    RepMatrix m(dim_);
    m.labels = labels;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t k = 0; k < dim_; ++k) {
            const CycScalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                const CycScalar& b = o(k, j);
                if (b.is_zero()) continue;
                m(i, j) += a * b;
            }
        }
    return m;
}

RepMatrix RepMatrix::operator*(const CycScalar& s) const {
    RepMatrix m = *this;
    for (auto& x : m.e_)
        if (!x.is_zero()) x = x * s;
    return m;
}

RepMatrix RepMatrix::operator+(const RepMatrix& o) const {
    if (dim_ != o.dim_) throw Error(ErrorCode::DimensionMismatch, "representation matrix sizes differ");
    RepMatrix m = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + o.e_[k];
    return m;
}

bool RepMatrix::operator==(const RepMatrix& o) const {
    if (dim_ != o.dim_) return false;
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (e_[k] != o.e_[k]) return false;
    return true;
}

std::vector<std::complex<double>> RepMatrix::apply(const std::vector<std::complex<double>>& v) const {
    std::vector<std::complex<double>> r(dim_, 0.0);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            const CycScalar& a = (*this)(i, j);
            if (!a.is_zero()) r[i] += a.to_complex() * v[j];
        }
    return r;
}

}  // namespace jacobiq
