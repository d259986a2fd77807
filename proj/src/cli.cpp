#include "jacobiq/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "jacobiq/cycles.hpp"
#include "jacobiq/disc.hpp"
#include "jacobiq/heisenberg.hpp"
#include "jacobiq/jacobi.hpp"
#include "jacobiq/lattice.hpp"
#include "jacobiq/theta.hpp"

namespace jacobiq::cli {

using json = nlohmann::json;

namespace {

// Validation failure, exit 2.
struct InputError {
    std::string message;
    std::string witness;
};

[[noreturn]] void bad_input(const std::string& message, const std::string& witness = {}) {
    throw InputError{message, witness};
}

std::string decimal_to_rational(const std::string& tok) {
    std::size_t dot = tok.find('.');
    if (dot == std::string::npos) return tok;
    std::string slash_part;
    std::string body = tok;
    std::size_t slash = tok.find('/');
    if (slash != std::string::npos) {
        slash_part = tok.substr(slash + 1);
        body = tok.substr(0, slash);
    }
    std::string digits = body.substr(0, dot) + body.substr(dot + 1);
    Int den = 1;
    for (std::size_t i = dot + 1; i < body.size(); ++i) den *= 10;
    if (!slash_part.empty()) den *= Int(slash_part);
    Rat q(Int(digits), den);
    q.canonicalize();
    return q.get_str();
}

// ---- decoding ----

Rat to_rat_json(const json& j, const char* what) {
    try {
        if (j.is_string()) return parse_rat(decimal_to_rational(j.get<std::string>()));
        if (j.is_number_integer()) return Rat(std::to_string(j.get<long long>()));
        if (j.is_number_unsigned()) return Rat(std::to_string(j.get<unsigned long long>()));
    } catch (const Error&) {
    }
    bad_input(std::string("expected a rational for ") + what, j.dump());
}

RatVec to_vec_json(const json& j, const char* what) {
    RatVec v;
    if (j.is_array()) {
        for (const auto& x : j) v.push_back(to_rat_json(x, what));
    } else {
        v.push_back(to_rat_json(j, what));
    }
    return v;
}

IntVec to_intvec_json(const json& j, const char* what) {
    IntVec out;
    for (const auto& q : to_vec_json(j, what)) {
        if (!is_integer(q)) bad_input(std::string("expected integers for ") + what, j.dump());
        out.push_back(q.get_num());
    }
    return out;
}

RationalMatrix to_matrix_json(const json& j, const char* what) {
    if (!j.is_array()) {
        RationalMatrix m(1, 1);
        m(0, 0) = to_rat_json(j, what);
        return m;
    }
    std::size_t rows = j.size();
    if (rows == 0) bad_input(std::string("empty matrix for ") + what);
    std::size_t cols = j[0].is_array() ? j[0].size() : 1;
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        RatVec row = to_vec_json(j[i], what);
        if (row.size() != cols) bad_input(std::string("ragged matrix for ") + what, j.dump());
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = row[c];
    }
    return m;
}

CycScalar to_cyc_json(const json& j) {
    if (!j.is_array()) return CycScalar(to_rat_json(j, "coefficient"));
    std::vector<CycScalar::Term> t;
    for (const auto& pr : j) {
        if (!pr.is_array() || pr.size() != 2) bad_input("coefficient terms are [exponent, coeff] pairs", j.dump());
        t.push_back({to_rat_json(pr[0], "coefficient exponent"), to_rat_json(pr[1], "coefficient")});
    }
    return CycScalar::from_terms(t);
}

// ---- encoding ----

json enc(const Rat& q) { return q.get_str(); }

json enc(const RatVec& v) {
    if (v.size() == 1) return enc(v[0]);
    json a = json::array();
    for (const auto& x : v) a.push_back(enc(x));
    return a;
}

json enc(const IntVec& v) { return enc(to_rat(v)); }

json enc(const RationalMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(enc(m(i, c)));
        a.push_back(row);
    }
    return a;
}

json enc(const CycScalar& c, bool numeric) {
    if (numeric) {
        auto z = c.to_complex();
        return json::array({z.real(), z.imag()});
    }
    auto t = c.terms();
    if (t.empty()) return "0";
    if (t.size() == 1 && t[0].exponent == 0) return enc(t[0].coeff);
    json a = json::array();
    for (const auto& x : t) a.push_back(json::array({enc(x.exponent), enc(x.coeff)}));
    return a;
}

json enc(const RepMatrix& m, bool numeric) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(enc(m(i, c), numeric));
        rows.push_back(row);
    }
    return {{"dim", m.dim()}, {"labels", m.labels}, {"entries", rows}};
}

json enc(const FourierExpansion& f, bool numeric) {
    json terms = json::array();
    for (const auto& [k, v] : f.terms) {
        json c = json::array();
        for (const auto& x : v) c.push_back(enc(x, numeric));
        terms.push_back({{"m", enc(k.m)}, {"r", enc(k.r)}, {"coeff", c}});
    }
    return {{"N", f.N}, {"prec", enc(f.prec)}, {"labels", f.labels}, {"terms", terms}};
}

json enc(const ComponentVector& h, bool numeric) {
    json comps = json::array();
    for (std::size_t i = 0; i < h.nus.size(); ++i) {
        json series = json::array();
        for (const auto& [n, c] : h.h[i]) series.push_back({{"n", enc(n)}, {"coeff", enc(c, numeric)}});
        comps.push_back({{"nu", enc(h.nus[i])}, {"prec", enc(h.precs[i])}, {"series", series}});
    }
    return {{"prec", enc(h.prec)}, {"components", comps}};
}

// ---- inputs ----

struct Input {
    json data = json::object();
    bool numeric = false;
    bool verbose = false;

    bool has(const char* key) const { return data.contains(key) && !data[key].is_null(); }
    const json& get(const char* key) const {
        if (!has(key)) bad_input(std::string("missing required input '") + key + "'");
        return data[key];
    }
    RationalMatrix matrix(const char* key = "matrix") const { return to_matrix_json(get(key), key); }
    RatVec vec(const char* key) const { return to_vec_json(get(key), key); }
    RatVec vec_or_empty(const char* key) const { return has(key) ? vec(key) : RatVec{}; }
    IntVec ivec(const char* key) const { return to_intvec_json(get(key), key); }
    Rat rat(const char* key) const { return to_rat_json(get(key), key); }
    long integer(const char* key) const {
        Rat q = rat(key);
        if (!is_integer(q) || !q.get_num().fits_slong_p()) bad_input(std::string("expected an integer for ") + key);
        return q.get_num().get_si();
    }
    std::string str(const char* key, const std::string& fallback) const {
        if (!has(key)) return fallback;
        const json& j = data[key];
        return j.is_string() ? j.get<std::string>() : j.dump();
    }
};

RationalMatrix symmetric_matrix(const Input& in) {
    RationalMatrix M = in.matrix();
    if (!M.is_square()) throw Error(ErrorCode::DimensionMismatch, "matrix must be square", M.to_string());
    if (!M.is_symmetric()) throw Error(ErrorCode::NonSymmetric, "matrix must be symmetric", M.to_string());
    return M;
}

void require_len(const RatVec& v, std::size_t n, const char* what) {
    if (v.size() != n) bad_input(std::string(what) + " has wrong length", to_string(v));
}

IntVec default_ivec(const Input& in, const char* key, std::size_t n) {
    if (!in.has(key)) return IntVec(n, Int(0));
    IntVec v = in.ivec(key);
    if (v.size() != n) bad_input(std::string(key) + " has wrong length");
    return v;
}

Generator generator(const Input& in, std::size_t n) {
    std::string g = in.str("gen", "");
    if (g == "S") return Generator::S();
    if (g == "T") return Generator::T();
    if (g == "H" || g.empty()) {
        HeisenbergElement h;
        h.lambda = default_ivec(in, "lambda", n);
        h.mu = default_ivec(in, "mu", n);
        h.kappa = in.has("kappa") ? in.matrix("kappa") : RationalMatrix(n, n);
        if (h.kappa.rows() != n || h.kappa.cols() != n) bad_input("kappa has wrong shape");
        if (!h.kappa.is_integral()) bad_input("kappa must be integral");
        return Generator::heisenberg(h);
    }
    bad_input("gen must be S, T or H", g);
}

JacobiType jacobi_type(const Input& in, const RationalMatrix& M) {
    std::string t = in.str("type", "tensor");
    if (t == "scalar") return JacobiType::scalar(M);
    if (t == "tensor") return JacobiType::theta_tensor(M, in.vec_or_empty("alpha"), in.vec_or_empty("beta"));
    bad_input("type must be scalar or tensor", t);
}

FourierExpansion expansion_from(const json& j, const JacobiType& type) {
    if (!j.is_object()) bad_input("expansion must be an object");
    FourierExpansion f;
    f.N = type.M().rows();
    f.labels = type.labels();
    if (!j.contains("prec")) bad_input("expansion needs prec");
    f.prec = to_rat_json(j["prec"], "prec");
    if (!j.contains("terms") || !j["terms"].is_array()) bad_input("expansion needs a terms array");
    for (const auto& t : j["terms"]) {
        if (!t.contains("m") || !t.contains("r") || !t.contains("coeff")) bad_input("term needs m, r, coeff", t.dump());
        Rat m = to_rat_json(t["m"], "m");
        RatVec r = to_vec_json(t["r"], "r");
        require_len(r, f.N, "r");
        const json& c = t["coeff"];
        std::vector<CycScalar> cs;
        if (f.width() == 1 && !(c.is_array() && c.size() == 1)) {
            cs.push_back(to_cyc_json(c));
        } else {
            if (!c.is_array() || c.size() != f.width()) bad_input("coeff needs one entry per label", t.dump());
            for (const auto& x : c) cs.push_back(to_cyc_json(x));
        }
        if (m > f.prec) bad_input("term above precision", t.dump());
        for (std::size_t l = 0; l < cs.size(); ++l) f.add(m, r, l, cs[l]);
    }
    return f;
}

ComponentVector components_from(const json& j, const JacobiType& type) {
    if (!j.is_object() || !j.contains("components") || !j["components"].is_array())
        bad_input("components input needs a components array");
    if (!j.contains("prec")) bad_input("components input needs prec");
    ComponentVector h = component_template(type, to_rat_json(j["prec"], "prec"));
    for (const auto& c : j["components"]) {
        if (!c.is_object() || !c.contains("nu")) bad_input("component needs nu", c.dump());
        RatVec nu = to_vec_json(c["nu"], "nu");
        require_len(nu, type.M().rows(), "nu");
        std::size_t i = type.mod_index().index_of(nu);
        if (c.contains("prec")) h.precs[i] = to_rat_json(c["prec"], "prec");
        if (c.contains("series"))
            for (const auto& t : c["series"]) {
                if (!t.is_object() || !t.contains("n") || !t.contains("coeff")) bad_input("series term needs n, coeff", t.dump());
                CycScalar v = to_cyc_json(t["coeff"]);
                if (!v.is_zero()) h.h[i][to_rat_json(t["n"], "n")] += v;
            }
    }
    return h;
}

// ---- commands ----

using Handler = std::function<json(const Input&)>;

json cmd_snf(const Input& in) {
    SnfResult s = snf(in.matrix());
    return {{"U", enc(s.U)}, {"D", enc(s.D)}, {"V", enc(s.V)}};
}

json cmd_split(const Input& in) {
    IndexSplit s = split_index(symmetric_matrix(in));
    return {{"M_Z", enc(s.M_Z)}, {"M_frac", enc(s.M_frac)}, {"a", enc(s.a)}, {"b", enc(s.b)}};
}

json cmd_disc(const Input& in) {
    DiscGroup G = disc_group(symmetric_matrix(in));
    json reps = json::array();
    for (const auto& r : G.reps) reps.push_back(enc(r));
    json out = {{"order", G.order.get_si()}, {"reps", reps}};
    if (in.has("nu")) {
        RatVec nu = in.vec("nu");
        require_len(nu, G.M.rows(), "nu");
        out["canonical"] = enc(canonicalize(G, nu));
        out["qvalue"] = enc(qvalue(G, canonicalize(G, nu)));
    }
    if (in.verbose) {
        out["elementary_divisors"] = enc(G.elementary_divisors);
        json q = json::array();
        if (is_admissible_index(G.split))
            for (const auto& r : G.reps) q.push_back(enc(qvalue(G, r)));
        out["qvalues"] = q;
    }
    return out;
}

json cmd_admissible(const Input& in) { return {{"admissible", is_admissible_index(symmetric_matrix(in))}}; }

json cmd_theta(const Input& in) {
    RationalMatrix M = symmetric_matrix(in);
    Rat prec = in.rat("prec");
    FourierExpansion f;
    if (in.has("nu")) {
        RatVec nu = in.vec("nu");
        require_len(nu, M.rows(), "nu");
        f = theta_component(M, nu, prec);
    } else {
        f = theta_vector(M, prec);
    }
    return enc(f, in.numeric);
}

json cmd_theta_shifted(const Input& in) {
    RationalMatrix M = symmetric_matrix(in);
    RatVec nu = in.vec("nu");
    require_len(nu, M.rows(), "nu");
    return enc(theta_shifted(M, nu, in.vec_or_empty("alpha"), in.vec_or_empty("beta"), in.rat("prec")), in.numeric);
}

std::string family(const Input& in) {
    std::string f = in.str("family", in.has("alpha") || in.has("beta") ? "pi" : "rho");
    if (f != "pi" && f != "rho" && f != "induced") bad_input("family must be pi, rho or induced", f);
    return f;
}

RatVec zero_if_empty(RatVec v, std::size_t n) { return v.empty() ? RatVec(n, Rat(0)) : v; }

json cmd_rep(const Input& in) {
    RationalMatrix M = symmetric_matrix(in);
    std::size_t n = M.rows();
    std::string f = family(in);
    Generator g = generator(in, n);
    if (f == "pi") {
        if (g.kind != Generator::Kind::Heisenberg) bad_input("the pi family only carries Heisenberg elements");
        PiRep rep(M, zero_if_empty(in.vec_or_empty("alpha"), n), zero_if_empty(in.vec_or_empty("beta"), n));
        return enc(pi_matrix(rep, g.h), in.numeric);
    }
    if (f == "rho") return enc(rho_M_matrix(disc_group(M), g), in.numeric);
    OrbitAB orbit = orbit_alpha_beta(M, in.vec_or_empty("alpha"), in.vec_or_empty("beta"));
    return enc(rho_induced_matrix(orbit, g), in.numeric);
}

json cmd_rep_check(const Input& in) {
    RationalMatrix M = symmetric_matrix(in);
    std::size_t n = M.rows();
    std::string f = family(in);
    if (f == "pi") {
        PiRep rep(M, zero_if_empty(in.vec_or_empty("alpha"), n), zero_if_empty(in.vec_or_empty("beta"), n));
        std::vector<IntVec> units;
        for (std::size_t i = 0; i < n; ++i) {
            IntVec e(n, Int(0));
            e[i] = 1;
            units.push_back(e);
        }
        PiRepCheck c = check_pi_rep(rep, units, units);
        return {{"ok", c.ok()}, {"commutation", c.commutation}, {"unitary", c.unitary},
                {"eigen_distinct", c.eigen_distinct}, {"transitive", c.transitive}, {"witness", c.witness}};
    }
    if (f == "rho") {
        RhoRelationsReport r = rho_relations_report(disc_group(M));
        return {{"ok", r.ok()},
                {"gauss", enc(r.gauss, in.numeric)},
                {"gauss_unit", r.gauss_unit},
                {"st3", r.st3},
                {"s2_permutation", r.s2_permutation},
                {"conj_S", r.conj_S},
                {"conj_T", r.conj_T},
                {"witnesses", r.witnesses}};
    }
    InducedReport r = rho_induced_report(orbit_alpha_beta(M, in.vec_or_empty("alpha"), in.vec_or_empty("beta")));
    return {{"ok", r.ok()}, {"conjugation", r.conjugation}, {"st3_block_scalar", r.st3_block_scalar},
            {"unitary", r.unitary}, {"witnesses", r.witnesses}};
}

json cmd_orbit(const Input& in) {
    OrbitAB o = orbit_alpha_beta(symmetric_matrix(in), in.vec_or_empty("alpha"), in.vec_or_empty("beta"));
    json pairs = json::array();
    for (const auto& p : o.pairs) pairs.push_back({{"alpha", enc(p.alpha)}, {"beta", enc(p.beta)}});
    return {{"size", o.pairs.size()}, {"pairs", pairs}};
}

json cmd_pi_iso(const Input& in) {
    RationalMatrix M = symmetric_matrix(in);
    RationalMatrix M2 = in.has("matrix2") ? in.matrix("matrix2") : M;
    std::size_t n = M.rows();
    PiRep r1(M, zero_if_empty(in.vec_or_empty("alpha"), n), zero_if_empty(in.vec_or_empty("beta"), n));
    PiRep r2(M2, zero_if_empty(in.vec_or_empty("alpha2"), n), zero_if_empty(in.vec_or_empty("beta2"), n));
    PiIsomorphism iso = pi_isomorphism(r1, r2);
    json out = {{"isomorphic", iso.isomorphic}, {"reason", iso.reason}, {"witness", iso.witness}};
    if (iso.intertwiner) out["intertwiner"] = enc(*iso.intertwiner, in.numeric);
    return out;
}

json cmd_rd(const Input& in) {
    RationalMatrix M = symmetric_matrix(in);
    if (!in.verbose) return {{"rd", enc(rd(M))}};
    VoronoiData v = voronoi(M);
    json rel = json::array(), vert = json::array();
    for (const auto& x : v.relevant_vectors) rel.push_back(enc(x));
    for (const auto& x : v.vertices) vert.push_back(enc(x));
    return {{"rd", enc(v.rd)}, {"rd_upper_bound", enc(rd_upper_bound(M))}, {"relevant_vectors", rel}, {"vertices", vert}};
}

json cmd_md(const Input& in) { return {{"md", enc(md(symmetric_matrix(in)))}}; }

json cmd_reduce(const Input& in) {
    RationalMatrix M = symmetric_matrix(in);
    ReducedBasis b = minkowski_reduce(M);
    return {{"basis", enc(b.g)}, {"gram", enc(b.gram)}, {"canonical", enc(reduced_canonical_form(M))}, {"md", enc(md(M))}};
}

json cmd_enumerate_coset(const Input& in) {
    RationalMatrix M = symmetric_matrix(in);
    RatVec nu = in.has("nu") ? in.vec("nu") : RatVec(M.rows(), Rat(0));
    require_len(nu, M.rows(), "nu");
    json pts = json::array();
    for (const auto& p : enumerate_coset_points(M, nu, in.rat("bound")))
        pts.push_back({{"xi", enc(p.xi)}, {"exponent", enc(p.exponent)}});
    return {{"points", pts}};
}

json cmd_decompose(const Input& in) {
    RationalMatrix M = symmetric_matrix(in);
    JacobiType type = jacobi_type(in, M);
    JacobiFormData phi{in.rat("k"), type, expansion_from(in.get("expansion"), type)};
    return enc(theta_decompose(phi), in.numeric);
}

json cmd_reconstruct(const Input& in) {
    RationalMatrix M = symmetric_matrix(in);
    JacobiType type = jacobi_type(in, M);
    ComponentVector h = components_from(in.get("components"), type);
    Rat prec = in.rat("prec");
    JacobiFormData phi = theta_reconstruct(h, in.rat("k"), type, prec);
    return enc(phi.expansion, in.numeric);
}

json cmd_vanishing_bound(const Input& in) {
    Rat k = in.rat("k");
    if (!in.has("matrix")) return {{"bound", enc(vv_vanishing_bound(k))}};
    return {{"bound", enc(vanishing_bound(k, symmetric_matrix(in)))}};
}

json cmd_certify(const Input& in) {
    RationalMatrix M = symmetric_matrix(in);
    JacobiType type = jacobi_type(in, M);
    JacobiFormData phi{in.rat("k"), type, expansion_from(in.get("expansion"), type)};
    VanishingReport r = certify_vanishing(phi);
    json out = {{"vanishes", r.vanishes}, {"bound", enc(r.bound)}};
    if (r.first_nonzero) {
        out["first_nonzero"] = {{"m", enc(r.first_nonzero->m)}, {"r", enc(r.first_nonzero->r)}, {"label", r.label}};
    }
    return out;
}

json cmd_cycles(const Input& in) {
    int r = static_cast<int>(in.integer("rank"));
    long n = in.integer("signature");
    long d = in.has("denominator") ? in.integer("denominator") : 1;
    CycleGeneratorSet s = cycle_generators(r, n, d);
    json out = {{"count", s.matrices.size()}};
    if (in.has("count_only") && in.data["count_only"] == true) return out;
    json mats = json::array();
    for (const auto& m : s.matrices) mats.push_back(enc(m.T));
    out["matrices"] = mats;
    if (in.verbose) {
        json cls = json::array();
        for (const auto& c : s.classes) cls.push_back({{"M", enc(c.M)}, {"rd", enc(c.rd)}, {"md", enc(c.md)}});
        out["bound"] = enc(s.bound);
        out["classes"] = cls;
    }
    return out;
}

const std::map<std::string, std::pair<Handler, const char*>>& commands() {
    static const std::map<std::string, std::pair<Handler, const char*>> table = {
        {"snf", {cmd_snf, "Smith normal form U·D·V of a rational matrix"}},
        {"split-index", {cmd_split, "integral and fractional parts M_Z, M_frac"}},
        {"disc", {cmd_disc, "discriminant group representatives"}},
        {"admissible", {cmd_admissible, "admissibility of the index"}},
        {"theta", {cmd_theta, "theta series q-expansion (vector or one component with --nu)"}},
        {"theta-shifted", {cmd_theta_shifted, "shifted theta series with --alpha/--beta"}},
        {"rep", {cmd_rep, "representation matrix of a generator"}},
        {"rep-check", {cmd_rep_check, "exact structural checks of a representation"}},
        {"orbit", {cmd_orbit, "orbit of (alpha, beta)"}},
        {"pi-iso", {cmd_pi_iso, "isomorphism test between two Heisenberg representations"}},
        {"rd", {cmd_rd, "squared covering radius"}},
        {"md", {cmd_md, "largest diagonal entry of a reduced Gram matrix"}},
        {"reduce", {cmd_reduce, "Minkowski reduction and canonical form"}},
        {"enumerate-coset", {cmd_enumerate_coset, "coset points with bounded theta exponent"}},
        {"decompose", {cmd_decompose, "theta decomposition of Jacobi form data"}},
        {"reconstruct", {cmd_reconstruct, "Jacobi form data from components"}},
        {"vanishing-bound", {cmd_vanishing_bound, "Sturm-type bound"}},
        {"certify-vanishing", {cmd_certify, "vanishing certificate"}},
        {"cycle-generators", {cmd_cycles, "moment matrices generating special cycles"}},
    };
    return table;
}

bool validation_code(ErrorCode c) {
    return c == ErrorCode::InvalidArgument || c == ErrorCode::DimensionMismatch || c == ErrorCode::NonSymmetric;
}

json error_json(const std::string& code, const std::string& message, const std::string& witness) {
    json e = {{"code", code}, {"message", message}};
    if (!witness.empty()) e["witness"] = witness;
    return {{"error", e}};
}

}  // namespace

std::string normalize_lenient_json(const std::string& text) {
    std::string out;
    bool in_string = false;
    for (std::size_t i = 0; i < text.size();) {
        char c = text[i];
        if (in_string) {
            out.push_back(c);
            if (c == '\\' && i + 1 < text.size()) {
                out.push_back(text[i + 1]);
                i += 2;
                continue;
            }
            if (c == '"') in_string = false;
            ++i;
            continue;
        }
        if (c == '"') {
            in_string = true;
            out.push_back(c);
            ++i;
            continue;
        }
        bool sign = (c == '-' || c == '+') && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]));
        if (sign || std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i + (sign ? 1 : 0);
            auto digits = [&] {
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            };
            digits();
            if (j + 1 < text.size() && text[j] == '.' && std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
                ++j;
                digits();
            }
            if (j + 1 < text.size() && text[j] == '/' && std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
                ++j;
                digits();
            }
            std::string tok = text.substr(i, j - i);
            if (tok[0] == '+') tok.erase(0, 1);
            out += "\"" + tok + "\"";
            i = j;
            continue;
        }
        out.push_back(c);
        ++i;
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"Exact computations for Jacobi forms of rational matrix index"};
    app.require_subcommand(1, 1);
    std::map<std::string, std::string> raw;
    std::string input_file;
    bool numeric = false, verbose = false, count_only = false;

    // flag name -> input key
    const std::vector<std::pair<std::string, std::string>> value_flags = {
        {"--matrix", "matrix"},     {"--matrix2", "matrix2"},   {"--nu", "nu"},
        {"--alpha", "alpha"},       {"--beta", "beta"},         {"--alpha2", "alpha2"},
        {"--beta2", "beta2"},       {"--prec", "prec"},         {"--bound", "bound"},
        {"-k,--weight", "k"},               {"--lambda", "lambda"},     {"--mu", "mu"},
        {"--kappa", "kappa"},       {"--rank", "rank"},         {"--signature", "signature"},
        {"--denominator", "denominator"}, {"--expansion", "expansion"}, {"--components", "components"},
    };
    const std::vector<std::pair<std::string, std::string>> word_flags = {
        {"--gen", "gen"}, {"--family", "family"}, {"--type", "type"}};

    for (const auto& [name, help] : commands()) {
        CLI::App* sub = app.add_subcommand(name, help.second);
        for (const auto& [flag, key] : value_flags) sub->add_option(flag, raw[key], key);
        for (const auto& [flag, key] : word_flags) sub->add_option(flag, raw[key], key);
        sub->add_option("--input", input_file, "JSON file with the inputs as keys");
        sub->add_flag("--numeric", numeric, "complex doubles instead of exact coefficients");
        sub->add_flag("--verbose", verbose, "include auxiliary data");
        if (name == "cycle-generators") sub->add_flag("--count-only", count_only, "report only the count");
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << json{{"help", app.help()}}.dump() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        out << error_json("ParseError", e.what(), "").dump() << "\n";
        return 2;
    }

    std::string name = app.get_subcommands().front()->get_name();
    try {
        Input in;
        in.numeric = numeric;
        in.verbose = verbose;
        if (!input_file.empty()) {
            std::ifstream f(input_file);
            if (!f) bad_input("cannot read input file", input_file);
            std::stringstream ss;
            ss << f.rdbuf();
            json j = json::parse(normalize_lenient_json(ss.str()), nullptr, false);
            if (j.is_discarded() || !j.is_object()) bad_input("input file is not a JSON object", input_file);
            in.data = j;
            if (j.value("numeric", false)) in.numeric = true;
            if (j.value("verbose", false)) in.verbose = true;
        }
        for (const auto& [flag, key] : value_flags) {
            const std::string& v = raw[key];
            if (v.empty()) continue;
            json j = json::parse(normalize_lenient_json(v), nullptr, false);
            if (j.is_discarded()) bad_input("cannot parse value of " + flag, v);
            in.data[key] = j;
        }
        for (const auto& [flag, key] : word_flags)
            if (!raw[key].empty()) in.data[key] = raw[key];
        if (count_only) in.data["count_only"] = true;
        json result = commands().at(name).first(in);
        out << result.dump() << "\n";
        return 0;
    } catch (const InputError& e) {
        out << error_json("InvalidInput", e.message, e.witness).dump() << "\n";
        return 2;
    } catch (const Error& e) {
        out << error_json(error_code_name(e.code()), e.what(), e.witness()).dump() << "\n";
        return validation_code(e.code()) ? 2 : 1;
    } catch (const json::exception& e) {
        out << error_json("InvalidInput", e.what(), "").dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        out << error_json("InternalError", e.what(), "").dump() << "\n";
        return 1;
    }
}

int run(int argc, char** argv, std::ostream& out) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out);
}

}  // namespace jacobiq::cli
