#include "jacobiq/rational.hpp"

#include <algorithm>
#include <sstream>

namespace jacobiq {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::NotAdmissible: return "NotAdmissible";
        case ErrorCode::NotInGroup: return "NotInGroup";
        case ErrorCode::RankTooLarge: return "RankTooLarge";
        case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
        case ErrorCode::NonSymmetric: return "NonSymmetric";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotPrimitive: return "NotPrimitive";
        case ErrorCode::InconsistentSeed: return "InconsistentSeed";
        case ErrorCode::InconsistentExpansion: return "InconsistentExpansion";
        case ErrorCode::PrecisionMismatch: return "PrecisionMismatch";
        case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
        case ErrorCode::NotUpperHalfPlane: return "NotUpperHalfPlane";
        case ErrorCode::RankOutOfRange: return "RankOutOfRange";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Rat parse_rat(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (ch != ' ' && ch != '+') t.push_back(ch);
    if (t.empty()) throw Error(ErrorCode::InvalidArgument, "empty rational literal");
    std::size_t slash = t.find('/');
    auto valid_int = [](const std::string& x, bool allow_sign) {
        if (x.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && x[0] == '-') i = 1;
        if (i == x.size()) return false;
        for (; i < x.size(); ++i)
            if (x[i] < '0' || x[i] > '9') return false;
        return true;
    };
    Rat q;
    if (slash == std::string::npos) {
        if (!valid_int(t, true)) throw Error(ErrorCode::InvalidArgument, "bad rational literal: " + s);
        q = Rat(Int(t), 1);
    } else {
        std::string num = t.substr(0, slash), den = t.substr(slash + 1);
        if (!valid_int(num, true) || !valid_int(den, false))
            throw Error(ErrorCode::InvalidArgument, "bad rational literal: " + s);
        Int d(den);
        if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator: " + s);
        q = Rat(Int(num), d);
    }
    q.canonicalize();
    return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rat frac(const Rat& q) { return q - Rat(floor_rat(q)); }

Rat mod_rat(const Rat& q, const Rat& m) {
    Rat t = q / m;
    return q - m * Rat(floor_rat(t));
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

bool is_integral(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return is_integer(x); });
}

Int lcm_denominators(const RatVec& v) {
    Int l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

RatVec to_rat(const IntVec& v) {
    RatVec r;
    r.reserve(v.size());
    for (const auto& x : v) r.emplace_back(x);
    return r;
}

static void check_same(std::size_t a, std::size_t b) {
    if (a != b) throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
}

RatVec operator+(const RatVec& a, const RatVec& b) {
    check_same(a.size(), b.size());
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
    check_same(a.size(), b.size());
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec operator-(const RatVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

RatVec operator*(const Rat& s, const RatVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Rat dot(const RatVec& a, const RatVec& b) {
    check_same(a.size(), b.size());
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool lex_less(const RatVec& a, const RatVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------- matrices

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
        for (const auto& x : r) a_.push_back(x);
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::diagonal(const RatVec& d) {
    RationalMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RatVec>& cols) {
    if (cols.empty()) return {};
    RationalMatrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        check_same(cols[j].size(), m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
    }
    return m;
}

RatVec RationalMatrix::column(std::size_t j) const {
    RatVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

RatVec RationalMatrix::row(std::size_t i) const {
    return RatVec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RationalMatrix RationalMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    RationalMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

bool RationalMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool RationalMatrix::is_integral() const { return jacobiq::is_integral(a_); }

Int RationalMatrix::denominator_lcm() const { return lcm_denominators(a_); }

Rat RationalMatrix::det() const {
    if (!is_square()) throw Error(ErrorCode::DimensionMismatch, "det of non-square matrix");
    RationalMatrix w = *this;
    std::size_t n = rows_;
    Rat d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && w(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w(p, j), w(c, j));
            d = -d;
        }
        d *= w(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (w(i, c) == 0) continue;
            Rat f = w(i, c) / w(c, c);
            for (std::size_t j = c; j < n; ++j) w(i, j) -= f * w(c, j);
        }
    }
    return d;
}

RationalMatrix RationalMatrix::inverse() const {
    if (!is_square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
    std::size_t n = rows_;
    RationalMatrix w = *this, inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && w(p, c) == 0) ++p;
        if (p == n) throw Error(ErrorCode::Singular, "matrix is singular");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w(p, j), w(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        Rat piv = w(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            w(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || w(i, c) == 0) continue;
            Rat f = w(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                w(i, j) -= f * w(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::size_t RationalMatrix::rank() const {
    RationalMatrix w = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && w(p, c) == 0) ++p;
        if (p == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(w(p, j), w(r, j));
        for (std::size_t i = r + 1; i < rows_; ++i) {
            if (w(i, c) == 0) continue;
            Rat f = w(i, c) / w(r, c);
            for (std::size_t j = c; j < cols_; ++j) w(i, j) -= f * w(r, j);
        }
        ++r;
    }
    return r;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::string RationalMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ",";
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ",";
            os << (*this)(i, j).get_str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
    RationalMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    return a + Rat(-1) * b;
}

RationalMatrix operator*(const Rat& s, const RationalMatrix& a) {
    RationalMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
    return c;
}

RatVec operator*(const RationalMatrix& a, const RatVec& v) {
    if (a.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
    RatVec r(a.rows(), Rat(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
    return r;
}

RationalMatrix congruent(const RationalMatrix& M, const RationalMatrix& A) {
    return A.transpose() * M * A;
}

// ---------------------------------------------------------------- SNF

namespace {

using IMat = std::vector<std::vector<Int>>;

IMat to_imat(const RationalMatrix& A) {
    IMat m(A.rows(), std::vector<Int>(A.cols()));
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) m[i][j] = A(i, j).get_num();
    return m;
}

RationalMatrix from_imat(const IMat& m, std::size_t rows, std::size_t cols) {
    RationalMatrix r(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) r(i, j) = Rat(m[i][j]);
    return r;
}

IMat ident(std::size_t n) {
    IMat m(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

// Tracks S with A = U·S·V throughout.
struct SnfWork {
    IMat S, U, V;
    std::size_t m, n;

    void swap_rows(std::size_t i, std::size_t j) {
        std::swap(S[i], S[j]);
        for (std::size_t k = 0; k < m; ++k) std::swap(U[k][i], U[k][j]);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < m; ++k) std::swap(S[k][i], S[k][j]);
        std::swap(V[i], V[j]);
    }
    // row i += f·row j
    void add_row(std::size_t i, std::size_t j, const Int& f) {
        for (std::size_t k = 0; k < n; ++k) S[i][k] += f * S[j][k];
        for (std::size_t k = 0; k < m; ++k) U[k][j] -= f * U[k][i];
    }
    // col i += f·col j
    void add_col(std::size_t i, std::size_t j, const Int& f) {
        for (std::size_t k = 0; k < m; ++k) S[k][i] += f * S[k][j];
        for (std::size_t k = 0; k < n; ++k) V[j][k] -= f * V[i][k];
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < n; ++k) S[i][k] = -S[i][k];
        for (std::size_t k = 0; k < m; ++k) U[k][i] = -U[k][i];
    }
};

Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void integer_snf(SnfWork& w) {
    std::size_t lim = std::min(w.m, w.n);
    for (std::size_t t = 0; t < lim; ++t) {
        while (true) {
            // smallest nonzero entry of the trailing block becomes the pivot
            bool found = false;
            std::size_t pi = t, pj = t;
            Int best;
            for (std::size_t i = t; i < w.m; ++i)
                for (std::size_t j = t; j < w.n; ++j) {
                    if (w.S[i][j] == 0) continue;
                    Int a = abs(w.S[i][j]);
                    if (!found || a < best) {
                        found = true;
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) return;
            if (pi != t) w.swap_rows(pi, t);
            if (pj != t) w.swap_cols(pj, t);

            bool dirty = false;
            for (std::size_t i = t + 1; i < w.m; ++i) {
                if (w.S[i][t] == 0) continue;
                Int q = fdiv(w.S[i][t], w.S[t][t]);
                w.add_row(i, t, -q);
                if (w.S[i][t] != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < w.n; ++j) {
                if (w.S[t][j] == 0) continue;
                Int q = fdiv(w.S[t][j], w.S[t][t]);
                w.add_col(j, t, -q);
                if (w.S[t][j] != 0) dirty = true;
            }
            if (dirty) continue;

            bool divides = true;
            for (std::size_t i = t + 1; i < w.m && divides; ++i)
                for (std::size_t j = t + 1; j < w.n; ++j)
                    if (w.S[i][j] % w.S[t][t] != 0) {
                        w.add_row(t, i, Int(1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (w.S[t][t] < 0) w.negate_row(t);
    }
}

}  // namespace

SnfResult snf(const RationalMatrix& A) {
    Int d = A.denominator_lcm();
    RationalMatrix Ad = Rat(d) * A;
    SnfWork w;
    w.m = A.rows();
    w.n = A.cols();
    w.S = to_imat(Ad);
    w.U = ident(w.m);
    w.V = ident(w.n);
    integer_snf(w);
    SnfResult r;
    r.U = from_imat(w.U, w.m, w.m);
    r.V = from_imat(w.V, w.n, w.n);
    r.D = RationalMatrix(w.m, w.n);
    for (std::size_t i = 0; i < w.m; ++i)
        for (std::size_t j = 0; j < w.n; ++j) r.D(i, j) = Rat(w.S[i][j], d);
    for (std::size_t i = 0; i < w.m; ++i)
        for (std::size_t j = 0; j < w.n; ++j) r.D(i, j).canonicalize();
    return r;
}

IntVec invariant_factors(const RationalMatrix& A) {
    if (!A.is_integral()) throw Error(ErrorCode::InvalidArgument, "invariant factors need an integer matrix");
    SnfResult r = snf(A);
    IntVec f;
    for (std::size_t i = 0; i < std::min(A.rows(), A.cols()); ++i)
        if (r.D(i, i) != 0) f.push_back(r.D(i, i).get_num());
    return f;
}

// ---------------------------------------------------------------- misc

RationalMatrix adjugate(const RationalMatrix& M) {
    if (!M.is_square()) throw Error(ErrorCode::DimensionMismatch, "adjugate of non-square matrix");
    std::size_t n = M.rows();
    RationalMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RationalMatrix minor(n - 1, n - 1);
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(rr, cc++) = M(r, c);
                }
                ++rr;
            }
            Rat cof = minor.det();
            adj(i, j) = ((i + j) % 2 == 0) ? cof : Rat(-cof);
        }
    return adj;
}

static void require_symmetric(const RationalMatrix& M) {
    if (!M.is_symmetric()) throw Error(ErrorCode::NonSymmetric, "matrix is not symmetric", M.to_string());
}

bool is_positive_definite(const RationalMatrix& M) {
    require_symmetric(M);
    for (std::size_t k = 1; k <= M.rows(); ++k)
        if (M.block(0, 0, k, k).det() <= 0) return false;
    return true;
}

bool is_positive_semidefinite(const RationalMatrix& M) {
    require_symmetric(M);
    std::size_t n = M.rows();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        RationalMatrix sub(idx.size(), idx.size());
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = M(idx[a], idx[b]);
        if (sub.det() < 0) return false;
    }
    return true;
}

Rat gram_eval(const RationalMatrix& M, const RatVec& x) { return bilinear(M, x, x); }

Rat bilinear(const RationalMatrix& M, const RatVec& x, const RatVec& y) {
    if (M.rows() != x.size() || M.cols() != y.size())
        throw Error(ErrorCode::DimensionMismatch, "gram evaluation shape mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        Rat t = 0;
        for (std::size_t j = 0; j < y.size(); ++j) t += M(i, j) * y[j];
        s += x[i] * t;
    }
    return s;
}

RationalMatrix unimodular_completion(const IntVec& v) {
    std::size_t n = v.size();
    if (n == 0) throw Error(ErrorCode::DimensionMismatch, "empty vector");
    Int g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g != 1) throw Error(ErrorCode::NotPrimitive, "vector is not primitive", to_string(to_rat(v)));
    if (n == 1) {
        RationalMatrix m(1, 1);
        m(0, 0) = Rat(v[0]);
        return m;
    }
    IntVec head(v.begin(), v.end() - 1);
    Int h = 0;
    for (const auto& x : head) mpz_gcd(h.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
    RationalMatrix out(n, n);
    if (h == 0) {
        out = RationalMatrix::identity(n);
        for (std::size_t i = 0; i < n; ++i) out(i, n - 1) = Rat(v[i]);
        return out;
    }
    IntVec u(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) u[i] = head[i] / h;
    RationalMatrix inner = unimodular_completion(u);
    Int gg, ca, cb;
    mpz_gcdext(gg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t(), h.get_mpz_t(), v[n - 1].get_mpz_t());
    // h·ca + v_n·cb = 1
    for (std::size_t j = 0; j + 2 < n; ++j)
        for (std::size_t i = 0; i + 1 < n; ++i) out(i, j) = inner(i, j);
    for (std::size_t i = 0; i + 1 < n; ++i) out(i, n - 2) = Rat(cb * u[i]);
    out(n - 1, n - 2) = Rat(-ca);
    for (std::size_t i = 0; i < n; ++i) out(i, n - 1) = Rat(v[i]);
    return out;
}

RatVec solve(const RationalMatrix& A, const RatVec& b) { return A.inverse() * b; }

std::vector<RatVec> kernel(const RationalMatrix& A) {
    RationalMatrix w = A;
    std::size_t m = A.rows(), n = A.cols();
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && w(p, c) == 0) ++p;
        if (p == m) continue;
        for (std::size_t j = 0; j < n; ++j) std::swap(w(p, j), w(r, j));
        Rat piv = w(r, c);
        for (std::size_t j = 0; j < n; ++j) w(r, j) /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || w(i, c) == 0) continue;
            Rat f = w(i, c);
            for (std::size_t j = 0; j < n; ++j) w(i, j) -= f * w(r, j);
        }
        pivcol.push_back(c);
        ++r;
    }
    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (std::find(pivcol.begin(), pivcol.end(), f) != pivcol.end()) continue;
        RatVec x(n, Rat(0));
        x[f] = 1;
        for (std::size_t k = 0; k < pivcol.size(); ++k) x[pivcol[k]] = -w(k, f);
        basis.push_back(x);
    }
    return basis;
}

}  // namespace jacobiq
