#include "autforms/geodesics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "autforms/green.hpp"
#include "autforms/quadrature.hpp"

namespace autforms {

double class_norm(long trace) {
    double t = static_cast<double>(trace);
    double lam = 0.5 * (t + std::sqrt(t * t - 4.0));
    return lam * lam;
}

// ---------------------------------------------------------------------------
// Reduction theory of indefinite binary quadratic forms of discriminant
// D = t^2 - 4.  Cycles of reduced forms <-> SL(2,Z)-classes of trace-t
// matrices <-> PSL(2,Z)-classes; matrix-imprimitive cycles are identified
// by powering the primitive representatives of lower traces.
namespace {

struct Form {
    long a, b, c;
    bool operator<(const Form& o) const {
        return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
    }
    bool operator==(const Form& o) const { return a == o.a && b == o.b && c == o.c; }
};

long isqrt_floor(long n) {
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_reduced(const Form& f, long D, long sq) {
    if (f.b <= 0 || f.b * f.b >= D) return false;
    long t1 = 2 * std::labs(f.a);
    // sqrt(D) - b < 2|a| < sqrt(D) + b, via integer comparisons around sq
    // use exact: (sq - b)^2-free comparison with doubles is fine at our sizes
    double sd = std::sqrt(static_cast<double>(D));
    return (sd - f.b < t1) && (t1 < sd + f.b);
}

// rho step with the standard normalization
Form rho_step(const Form& f, long D) {
    long c = f.c;
    long ac = std::labs(c);
    double sd = std::sqrt(static_cast<double>(D));
    long b2;
    if (static_cast<double>(ac) >= sd) {
        // -|c| < b' <= |c|, b' == -b (mod 2|c|)
        long m = 2 * ac;
        long r = ((-f.b) % m + m) % m;  // in [0, 2|c|)
        b2 = (r <= ac) ? r : r - m;
    } else {
        // sqrt(D) - 2|c| < b' < sqrt(D)
        long m = 2 * ac;
        long r = ((-f.b) % m + m) % m;
        long k = static_cast<long>(std::floor((sd - r) / m));
        b2 = r + k * m;
        if (b2 + m < sd) b2 += m;  // guard against floor slack
        while (static_cast<double>(b2) >= sd) b2 -= m;
        while (static_cast<double>(b2 + m) < sd) b2 += m;
    }
    long c2 = (b2 * b2 - D) / (4 * c);
    return {c, b2, c2};
}

Form reduce_form(Form f, long D) {
    for (int it = 0; it < 4000; ++it) {
        long sq = isqrt_floor(D);
        if (is_reduced(f, D, sq)) return f;
        f = rho_step(f, D);
    }
    throw domain_error("reduce_form: reduction did not terminate");
}

struct TraceCycles {
    long trace;
    std::vector<Form> cycle_key;                 // smallest form of each cycle
    std::vector<GroupElement> cycle_rep;         // matrix from the key form
    std::vector<std::pair<Form, int>> members;   // sorted (form -> cycle id)
    std::vector<bool> imprimitive;
};

GroupElement matrix_of_form(const Form& f, long t) {
    // gamma = [[(t-B)/2, -C],[A, (t+B)/2]]
    return GroupElement(0.5 * (t - f.b), static_cast<double>(-f.c), static_cast<double>(f.a),
                        0.5 * (t + f.b));
}

Form form_of_matrix(long a, long b, long c, long d) { return Form{c, d - a, -b}; }

TraceCycles cycles_of_trace(long t) {
    TraceCycles out;
    out.trace = t;
    const long D = t * t - 4;
    const long sq = isqrt_floor(D);
    // all reduced forms: b == D (mod 2), 0 < b < sqrt(D), ac = (b^2 - D)/4 < 0
    std::vector<Form> forms;
    for (long b = (D % 2 == 0) ? 2 : 1; b <= sq; b += 2) {
        if (b * b >= D) break;
        long am = (D - b * b) / 4;  // = -a*c > 0
        for (long a = 1; a * a <= am; ++a) {
            if (am % a) continue;
            long a2 = am / a;
            std::vector<long> cands = {a, -a};
            if (a2 != a) {
                cands.push_back(a2);
                cands.push_back(-a2);
            }
            for (long fa : cands) {
                Form f{fa, b, -am / fa};
                if (is_reduced(f, D, sq)) forms.push_back(f);
            }
        }
    }
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    // walk rho-cycles
    std::map<Form, int> seen;
    for (const Form& f0 : forms) {
        if (seen.count(f0)) continue;
        int id = static_cast<int>(out.cycle_key.size());
        Form key = f0, f = f0;
        for (int guard = 0;; ++guard) {
            seen[f] = id;
            out.members.push_back({f, id});
            if (guard > 100000) throw domain_error("cycles_of_trace: runaway cycle");
            f = rho_step(f, D);
            if (f == f0) break;
        }
        // canonical key: smallest member with positive leading coefficient,
        // so the representative matrix has c > 0 and trace +t
        bool have_pos = false;
        for (auto& [g, gid] : seen) {
            if (gid != id) continue;
            if (g.a > 0 && (!have_pos || g < key)) {
                if (!have_pos || g < key) key = g;
                have_pos = true;
            }
        }
        out.cycle_key.push_back(key);
        out.cycle_rep.push_back(matrix_of_form(key, t));
    }
    std::sort(out.members.begin(), out.members.end());
    out.imprimitive.assign(out.cycle_key.size(), false);
    return out;
}

int find_cycle(const TraceCycles& tc, const Form& f) {
    auto it = std::lower_bound(tc.members.begin(), tc.members.end(), std::make_pair(f, -1));
    if (it == tc.members.end() || !(it->first == f)) return -1;
    return it->second;
}

struct Mat2 {
    long a, b, c, d;
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

Mat2 mat_pow(Mat2 m, long n) {
    Mat2 r{1, 0, 0, 1};
    while (n > 0) {
        if (n & 1) r = r * m;
        m = m * m;
        n >>= 1;
    }
    return r;
}

// trace of the n-th power: V_0 = 2, V_1 = t0, V_k = t0 V_{k-1} - V_{k-2}
long lucas_v(long t0, long n) {
    long v0 = 2, v1 = t0;
    for (long k = 2; k <= n; ++k) {
        long v2 = t0 * v1 - v0;
        v0 = v1;
        v1 = v2;
    }
    return (n == 0) ? 2 : v1;
}

std::vector<ConjClass> census_impl(double x_max, bool parallel) {
    if (!(x_max >= 6.0)) throw domain_error("enumerate_pseudo_primes: x_max must be >= 6");
    long t_max = 2;
    while (class_norm(t_max + 1) < x_max) ++t_max;
    if (t_max < 3) return {};

    std::vector<TraceCycles> all(t_max - 2);
    if (parallel) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
        for (long t = 3; t <= t_max; ++t) all[t - 3] = cycles_of_trace(t);
    } else {
        for (long t = 3; t <= t_max; ++t) all[t - 3] = cycles_of_trace(t);
    }

    // mark matrix-imprimitive cycles, ascending in trace
    std::vector<std::vector<Mat2>> primitive_reps(t_max - 2);
    for (long t = 3; t <= t_max; ++t) {
        TraceCycles& tc = all[t - 3];
        const long D = t * t - 4;
        double lam = 0.5 * (t + std::sqrt(static_cast<double>(D)));
        for (long n = 2;; ++n) {
            double l0 = std::pow(lam, 1.0 / n);
            double t0d = l0 + 1.0 / l0;
            if (t0d < 3.0 - 1e-9) break;
            long t0 = std::lround(t0d);
            if (t0 < 3 || std::abs(t0d - t0) > 1e-6) continue;
            if (lucas_v(t0, n) != t) continue;
            for (const Mat2& mu : primitive_reps[t0 - 3]) {
                Mat2 w = mat_pow(mu, n);
                long tr = w.a + w.d;
                Form f = form_of_matrix(w.a, w.b, w.c, w.d);
                if (tr < 0) f = Form{-f.a, -f.b, -f.c};  // use the +trace representative
                f = reduce_form(f, D);
                int id = find_cycle(tc, f);
                if (id >= 0) tc.imprimitive[id] = true;
            }
        }
        // record this trace's primitive representatives for later powers
        for (std::size_t i = 0; i < tc.cycle_key.size(); ++i) {
            if (tc.imprimitive[i]) continue;
            const GroupElement& g = tc.cycle_rep[i];
            primitive_reps[t - 3].push_back({std::lround(g.a), std::lround(g.b), std::lround(g.c),
                                             std::lround(g.d)});
        }
    }

    std::vector<ConjClass> out;
    for (long t = 3; t <= t_max; ++t) {
        const TraceCycles& tc = all[t - 3];
        long mult = 0;
        int rep_id = -1;
        for (std::size_t i = 0; i < tc.cycle_key.size(); ++i)
            if (!tc.imprimitive[i]) {
                ++mult;
                if (rep_id < 0) rep_id = static_cast<int>(i);
            }
        if (mult == 0) continue;
        double N = class_norm(t);
        if (N >= x_max) continue;
        ConjClass c;
        c.trace = t;
        c.norm = N;
        c.representative = tc.cycle_rep[rep_id];
        c.multiplicity = mult;
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const ConjClass& a, const ConjClass& b) { return a.norm < b.norm; });
    return out;
}

const std::vector<ConjClass>& census_cached(double x_max) {
    static thread_local double cached_x = -1.0;
    static thread_local std::vector<ConjClass> cached;
    if (x_max > cached_x) {
        cached = census_impl(x_max, true);
        cached_x = x_max;
    }
    return cached;
}

}  // namespace

std::vector<ConjClass> enumerate_pseudo_primes(double x_max) { return census_impl(x_max, true); }
std::vector<ConjClass> enumerate_pseudo_primes_serial(double x_max) { return census_impl(x_max, false); }

// ---------------------------------------------------------------------------
// Brute-force conjugacy oracle.
namespace {

struct Key4 {
    std::array<long, 4> v;
    bool operator<(const Key4& o) const { return v < o.v; }
};

Key4 canon(long a, long b, long c, long d) {
    if (c < 0 || (c == 0 && d < 0)) {
        a = -a;
        b = -b;
        c = -c;
        d = -d;
    }
    return {{a, b, c, d}};
}

struct UnionFind {
    std::vector<int> p;
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) p[x] = y;
    }
};

}  // namespace

OracleClasses census_bruteforce(long trace, long entry_bound) {
    const long B = entry_bound, BE = 3 * entry_bound;  // seed bound, exploration bound
    std::map<Key4, int> index;
    std::vector<Key4> mats;
    auto add = [&](long a, long b, long c, long d) -> int {
        Key4 k = canon(a, b, c, d);
        auto it = index.find(k);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(mats.size());
        index.emplace(k, id);
        mats.push_back(k);
        return id;
    };
    // seed set: all trace-t integer matrices with |entries| <= B
    std::vector<int> queue;
    for (long a = -B; a <= B; ++a) {
        long d = trace - a;
        if (std::labs(d) > B) continue;
        long K = a * d - 1;
        if (K == 0) {
            for (long c = -B; c <= B; ++c) queue.push_back(add(a, 0, c, d));
            for (long b = -B; b <= B; ++b) queue.push_back(add(a, b, 0, d));
        } else {
            for (long b = -B; b <= B; ++b) {
                if (b == 0 || K % b) continue;
                long c = K / b;
                if (std::labs(c) > B) continue;
                queue.push_back(add(a, b, c, d));
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    queue.erase(std::unique(queue.begin(), queue.end()), queue.end());
    UnionFind uf;
    uf.p.resize(mats.size());
    for (std::size_t i = 0; i < mats.size(); ++i) uf.p[i] = static_cast<int>(i);
    // closure under conjugation by S, S^{-1} and the involution T
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int id = queue[qi];
        long a = mats[id].v[0], b = mats[id].v[1], c = mats[id].v[2], d = mats[id].v[3];
        const std::array<std::array<long, 4>, 3> nbrs = {{
            {a + c, b + d - a - c, c, d - c},  // S g S^{-1}
            {a - c, a + b - c - d, c, c + d},  // S^{-1} g S
            {d, -c, -b, a},                    // T g T^{-1}
        }};
        for (const auto& n : nbrs) {
            if (std::max({std::labs(n[0]), std::labs(n[1]), std::labs(n[2]), std::labs(n[3])}) > BE)
                continue;
            std::size_t before = mats.size();
            int nid = add(n[0], n[1], n[2], n[3]);
            if (mats.size() > before) {
                uf.p.push_back(nid);
                queue.push_back(nid);
            }
            uf.unite(id, nid);
        }
    }
    // orbits restricted to the seed window
    std::map<int, std::vector<int>> orbits;
    for (std::size_t i = 0; i < mats.size(); ++i) {
        const auto& m = mats[i].v;
        if (std::max({std::labs(m[0]), std::labs(m[1]), std::labs(m[2]), std::labs(m[3])}) > B) continue;
        orbits[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));
    }
    OracleClasses out;
    out.trace = trace;
    out.count = static_cast<long>(orbits.size());
    std::map<int, int> root_to_class;
    for (auto& [root, ids] : orbits) {
        root_to_class[root] = static_cast<int>(out.reps.size());
        const auto& m = mats[ids.front()].v;
        out.reps.emplace_back(static_cast<double>(m[0]), static_cast<double>(m[1]),
                              static_cast<double>(m[2]), static_cast<double>(m[3]));
    }
    // primitivity: classes hit by powering lower traces are proper powers
    std::vector<bool> imp(out.reps.size(), false);
    double lam = 0.5 * (trace + std::sqrt(static_cast<double>(trace) * trace - 4.0));
    for (long n = 2;; ++n) {
        double l0 = std::pow(lam, 1.0 / n);
        double t0d = l0 + 1.0 / l0;
        if (t0d < 3.0 - 1e-9) break;
        long t0 = std::lround(t0d);
        if (t0 < 3 || std::abs(t0d - t0) > 1e-6) continue;
        if (lucas_v(t0, n) != trace) continue;
        OracleClasses lower = census_bruteforce(t0, entry_bound);
        for (const auto& rep : lower.reps) {
            Mat2 mu{std::lround(rep.a), std::lround(rep.b), std::lround(rep.c), std::lround(rep.d)};
            Mat2 w = mat_pow(mu, n);
            if (w.a + w.d < 0) {
                w.a = -w.a;
                w.b = -w.b;
                w.c = -w.c;
                w.d = -w.d;
            }
            auto it = index.find(canon(w.a, w.b, w.c, w.d));
            if (it == index.end()) continue;
            auto rit = root_to_class.find(uf.find(it->second));
            if (rit != root_to_class.end()) imp[rit->second] = true;
        }
    }
    out.primitive_count = 0;
    for (bool fl : imp)
        if (!fl) ++out.primitive_count;
    return out;
}

// ---------------------------------------------------------------------------
// Counting functions.

double psi_gamma(double x) {
    if (!(x > 1.0)) throw domain_error("psi_gamma: x must be > 1");
    const auto& cls = census_cached(std::max(x, 8.0));
    double s = 0.0;
    for (int n = 1;; ++n) {
        double thr = std::pow(x, 1.0 / n);
        if (thr <= 6.8) break;  // smallest norm is ~6.854
        for (const auto& c : cls) {
            if (c.norm >= thr) break;
            s += c.multiplicity * std::log(c.norm);
        }
    }
    return s;
}

long pi_gamma(double x) {
    if (!(x > 1.0)) throw domain_error("pi_gamma: x must be > 1");
    if (x <= 6.8) return 0;
    const auto& cls = census_cached(std::max(x, 8.0));
    long n = 0;
    for (const auto& c : cls) {
        if (c.norm >= x) break;
        n += c.multiplicity;
    }
    return n;
}

double log_integral(double x) {
    if (!(x > 1.0)) throw domain_error("log_integral: x must be > 1");
    // li(x) = gamma + log log x + sum_k (log x)^k/(k k!)
    double t = std::log(x);
    double s = EULER_GAMMA + std::log(t);
    double term = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= t / k;
        s += term / k;
        if (term / k < 1e-16 * std::abs(s)) break;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Selberg zeta.

TruncatedValue selberg_zeta_logderiv(cx s, double x_max) {
    if (!(s.real() > 1.0)) throw domain_error("selberg_zeta_logderiv: requires Re s > 1");
    const auto& cls = census_cached(x_max);
    std::vector<cx> terms(cls.size());
    for (std::size_t i = 0; i < cls.size(); ++i) {
        const auto& c = cls[i];
        double lnN = std::log(c.norm);
        cx acc = 0.0;
        for (int n = 0;; ++n) {
            cx Npow = std::exp((s + static_cast<double>(n)) * lnN);
            cx t = lnN / (Npow - 1.0);
            acc += t;
            if (std::abs(t) < 1e-18 * (std::abs(acc) + 1e-300)) break;
            if (n > 4000) break;
        }
        terms[i] = static_cast<double>(c.multiplicity) * acc;
    }
    TruncatedValue out;
    out.value = pairwise_sum(terms);
    // tail: sum_{N > x} log N / N^s ~ int_x^inf t^{-Re s} dpsi(t), psi ~ t
    out.est_tail = std::pow(x_max, 1.0 - s.real()) / (s.real() - 1.0);
    return out;
}

TruncatedValue selberg_zeta(cx s, double x_max) {
    if (!(s.real() > 1.0)) throw domain_error("selberg_zeta: requires Re s > 1");
    const auto& cls = census_cached(x_max);
    std::vector<cx> terms(cls.size());
    for (std::size_t i = 0; i < cls.size(); ++i) {
        const auto& c = cls[i];
        double lnN = std::log(c.norm);
        cx acc = 0.0;
        for (int n = 0;; ++n) {
            cx t = std::log(1.0 - std::exp(-(s + static_cast<double>(n)) * lnN));
            acc += t;
            if (std::abs(t) < 1e-18) break;
            if (n > 4000) break;
        }
        terms[i] = static_cast<double>(c.multiplicity) * acc;
    }
    TruncatedValue out;
    out.value = std::exp(pairwise_sum(terms));
    out.est_tail = std::pow(x_max, 1.0 - s.real()) / ((s.real() - 1.0) * std::log(x_max));
    return out;
}

// ---------------------------------------------------------------------------
// Trace-formula terms.

cx identity_term(cx alpha, cx beta) { return -(digamma(alpha) - digamma(beta)) / 6.0; }

cx elliptic_T_closed(cx alpha, int m, int j) {
    cx s = 0.0;
    double sj = std::sin(PI * j / m);
    for (int l = 0; l < m; ++l)
        s += std::sin((2.0 * l + 1.0) * PI * j / m) / sj * digamma((alpha + static_cast<double>(l)) / static_cast<double>(m));
    return s / ((1.0 - 2.0 * alpha) * static_cast<double>(m) * static_cast<double>(m));
}

cx elliptic_term(cx alpha) {
    return elliptic_T_closed(alpha, 2, 1) + elliptic_T_closed(alpha, 3, 1) + elliptic_T_closed(alpha, 3, 2);
}

namespace {

// cached radial profile p_alpha(e^t) on a uniform t-grid, 4-point Lagrange
struct PGreenTable {
    double t0 = -46.0, t1 = 16.0, h = 0.004;
    std::vector<cx> val;
    cx alpha;
    cx asym_c;  // Gamma(a)Gamma(a)/(4 pi Gamma(2a)) for ell = 0

    explicit PGreenTable(cx a) : alpha(a) {
        GreenParams gp{a, 0, 30};
        int n = static_cast<int>((t1 - t0) / h) + 2;
        val.resize(n);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 64)
#endif
        for (int i = 0; i < n; ++i) val[i] = p_green(gp, std::exp(t0 + i * h));
        asym_c = cgamma(a) * cgamma(a) / (4.0 * PI * cgamma(2.0 * a));
    }

    cx operator()(double rho) const {
        double t = std::log(rho);
        if (t <= t0 + h) {
            // (34.7): -log(rho)/4pi - (c_E + 2 psi(alpha))/4pi
            return -t / (4.0 * PI) - (EULER_GAMMA + 2.0 * digamma(alpha)) / (4.0 * PI);
        }
        if (t >= t1 - 2.0 * h) {
            return asym_c * std::exp(-alpha * std::log(rho));
        }
        double u = (t - t0) / h;
        long i = static_cast<long>(u);
        double f = u - i;
        // 4-point Lagrange on i-1..i+2
        const cx &p0 = val[i - 1], &p1 = val[i], &p2 = val[i + 1], &p3 = val[i + 2];
        double c0 = -f * (f - 1.0) * (f - 2.0) / 6.0;
        double c1 = (f * f - 1.0) * (f - 2.0) / 2.0;
        double c2 = -f * (f + 1.0) * (f - 2.0) / 2.0;
        double c3 = f * (f * f - 1.0) / 6.0;
        return c0 * p0 + c1 * p1 + c2 * p2 + c3 * p3;
    }
};

}  // namespace

cx elliptic_T_quadrature(cx alpha, int m, int j) {
    const double lam = std::sin(PI * j / m);
    PGreenTable P(alpha);
    // (1/m) int over H^2 of p(lam^2 |z^2+1|^2/(4 y^2)) dmu, polar in (x, log y)
    auto q_of = [&](double x, double s) {
        double y = std::exp(s);
        cx z(x, y);
        cx w = z * z + 1.0;
        double a2 = std::norm(w);
        return 0.25 * lam * lam * std::exp(-2.0 * s) * a2;
    };
    std::vector<double> gx, gw;
    gauss_legendre(16, gx, gw);
    const int nphi = 256;
    const double Rmax = 60.0, Rmin = 1e-7;
    const int shells = 64;
    std::vector<cx> shell_terms(shells);
    double hi = Rmax;
    double ratio = std::pow(Rmin / Rmax, 1.0 / shells);
    for (int sh = 0; sh < shells; ++sh) {
        double lo = hi * ratio;
        if (sh == shells - 1) lo = 0.0;
        cx acc = 0.0;
        for (std::size_t i = 0; i < gx.size(); ++i) {
            double r = 0.5 * (lo + hi) + 0.5 * (hi - lo) * gx[i];
            for (int k = 0; k < nphi; ++k) {
                double phi = TWO_PI * (k + 0.5) / nphi;
                double x = r * std::cos(phi), s = r * std::sin(phi);
                double q = q_of(x, s);
                acc += 0.5 * (hi - lo) * gw[i] * (TWO_PI / nphi) * r * std::exp(-s) * P(q);
            }
        }
        shell_terms[sh] = acc;
        hi = lo;
    }
    return pairwise_sum(shell_terms) / static_cast<double>(m);
}

cx parabolic_phi_integral_closed(cx alpha, cx beta) {
    auto piece = [](cx a) {
        return 2.0 * riemann_zeta_deriv(2.0 * a) / riemann_zeta(2.0 * a) + 2.0 / (2.0 * a - 1.0) +
               digamma(a) - std::log(PI);
    };
    return -piece(alpha) / (2.0 * alpha - 1.0) + piece(beta) / (2.0 * beta - 1.0);
}

cx parabolic_phi_integral_quadrature(cx alpha, cx beta, double height) {
    // -(1/2 pi) int_{-T}^{T} k(it)(2 zeta'/zeta(1+2it) + 1/(it) + psi(1/2+it) - log pi) dt
    auto integrand = [&](double t) -> cx {
        cx nu(0.0, t);
        cx v = 2.0 * riemann_zeta_deriv(1.0 + 2.0 * nu) / riemann_zeta(1.0 + 2.0 * nu) + 1.0 / nu +
               digamma(0.5 + nu) - std::log(PI);
        return k_spectral(alpha, beta, nu) * v;
    };
    // midpoint rule avoids the removable point t = 0; finer grid near 0
    cx s = 0.0;
    const double h1 = 0.004, split = 6.0, h2 = 0.05;
    long n1 = static_cast<long>(split / h1);
    for (long k = -n1; k < n1; ++k) s += h1 * integrand((k + 0.5) * h1);
    long n2 = static_cast<long>((height - split) / h2);
    for (long k = 0; k < n2; ++k) {
        double t = split + (k + 0.5) * h2;
        s += h2 * (integrand(t) + integrand(-t));
    }
    return -s / (2.0 * PI);
}

cx parabolic_term(cx alpha, cx beta) {
    cx k_half = k_spectral(alpha, beta, cx(0.5));
    return parabolic_phi_integral_closed(alpha, beta) - k_half -
           (digamma(alpha + 0.5) + std::log(2.0)) / (2.0 * alpha - 1.0) +
           (digamma(beta + 0.5) + std::log(2.0)) / (2.0 * beta - 1.0);
}

cx w_term(cx s) {
    return -(2.0 * s - 1.0) / 6.0 * digamma(s) + 0.25 * digamma(0.5 * (s + 1.0)) -
           0.25 * digamma(0.5 * s) + 2.0 / 9.0 * digamma((s + 2.0) / 3.0) - 2.0 / 9.0 * digamma(s / 3.0);
}

cx w_antisymmetry_rhs(cx eta) {
    auto cot_pi = [](cx w) { return cos_pi(w) / sin_pi(w); };
    cx t1 = -(PI * eta / 3.0) * (sin_pi(eta) / cos_pi(eta));
    cx t2 = 0.25 * PI * (cot_pi(0.5 * (0.5 - eta)) + cot_pi(0.5 * (0.5 + eta)));
    cx t3 = (2.0 * PI / 9.0) * (cot_pi((0.5 - eta) / 3.0) + cot_pi((0.5 + eta) / 3.0));
    return t1 + t2 + t3;
}

TruncatedValue psi_capital(cx s, double x_max) {
    TruncatedValue zg = selberg_zeta_logderiv(s, x_max);
    TruncatedValue out;
    out.value = zg.value - 2.0 * riemann_zeta_deriv(2.0 * s) / riemann_zeta(2.0 * s) - 1.0 / (s - 1.0) -
                1.0 / s - 2.0 / (2.0 * s - 1.0) + std::log(2.0 * PI) - 2.0 * digamma(2.0 * s) + w_term(s);
    out.est_tail = zg.est_tail;
    return out;
}

// ---------------------------------------------------------------------------

SpectralDataset SpectralDataset::load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw domain_error("SpectralDataset: cannot open " + path);
    SpectralDataset d;
    d.source = path;
    std::string line;
    double prev = 0.0;
    while (std::getline(f, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream iss(line);
        double r;
        if (!(iss >> r)) continue;
        if (!(r > 0.0)) throw domain_error("SpectralDataset: entries must be positive");
        if (r < prev) throw domain_error("SpectralDataset: entries must be sorted ascending");
        d.r.push_back(r);
        prev = r;
    }
    return d;
}

TraceFormulaReport trace_formula_check(cx alpha, cx beta, const SpectralDataset& data, double x_max) {
    if (data.r.empty()) throw domain_error("trace_formula_check: empty dataset");
    TruncatedValue pa = psi_capital(alpha, x_max), pb = psi_capital(beta, x_max);
    TraceFormulaReport rep;
    cx geom = pa.value / (2.0 * alpha - 1.0) - pb.value / (2.0 * beta - 1.0);
    rep.geometric = geom.real();
    double sum = 0.0;
    for (double r : data.r) sum += k_spectral(alpha, beta, cx(0.0, r)).real();
    // Weyl tail: dN ~ (r/6) dr beyond the dataset
    double R = data.r.back();
    double a2 = std::norm(alpha - 0.5), b2 = std::norm(beta - 0.5);
    double tail = (1.0 / 12.0) * std::log((b2 + R * R) / (a2 + R * R));
    rep.spectral = sum + tail;
    rep.gap = rep.geometric - rep.spectral;
    // model error: census truncation + O(K log K) Weyl remainder pushed through k
    rep.tail_estimate = (pa.est_tail / std::abs(2.0 * alpha - 1.0) +
                         pb.est_tail / std::abs(2.0 * beta - 1.0)) +
                        3.0 * std::log(R + 2.0) / (R * R);
    return rep;
}

WeylReport weyl_report(const SpectralDataset& data, double K) {
    if (data.r.empty() || data.r.back() < K)
        throw domain_error("weyl_report: dataset does not cover [0, K]");
    WeylReport w;
    w.count = static_cast<long>(std::upper_bound(data.r.begin(), data.r.end(), K) - data.r.begin());
    w.prediction = K * K / 12.0;
    return w;
}

FunctionalEquationFactors functional_equation_factors(cx s) {
    FunctionalEquationFactors f;
    if (std::abs(s - 0.5) < 1e-8) {
        f.chi_p = -1.0;  // limit of the zeta/Gamma ratio at the joint pole
    } else {
        f.chi_p = -std::exp((1.0 - 2.0 * s) * std::log(2.0 * PI)) * riemann_zeta(2.0 * s) *
                  cgamma(2.0 * s) / (riemann_zeta(2.0 - 2.0 * s) * cgamma(2.0 - 2.0 * s));
    }
    f.chi_e = std::pow(sin_pi(0.5 * (1.0 - s)) / sin_pi(0.5 * s), cx(0.5)) *
              std::pow(sin_pi((1.0 - s) / 3.0) / sin_pi(s / 3.0), cx(2.0 / 3.0));
    if (std::abs(s - 0.5) >= 0.5)
        throw domain_error("functional_equation_factors: chi_1 restricted to |s - 1/2| < 1/2");
    // chi_1 = exp((pi/3) int_0^{s-1/2} eta tan(pi eta) d eta) along the segment
    cx end = s - 0.5;
    auto g = [&](double t) -> cx {
        cx eta = end * t;
        return eta * sin_pi(eta) / cos_pi(eta) * end;
    };
    cx I = gauss_legendre_int([&](double t) { return g(t); }, 0.0, 1.0, 64);
    f.chi_1 = std::exp(PI / 3.0 * I);
    return f;
}

// ---------------------------------------------------------------------------

namespace {
void atomic_write(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp);
        if (!f) throw domain_error("cannot open " + tmp);
        f << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw domain_error("rename failed for " + path);
}
}  // namespace

void write_census_csv(const std::string& path, const std::vector<ConjClass>& classes) {
    std::ostringstream os;
    os.precision(15);
    os << "trace,norm,multiplicity,rep_a,rep_b,rep_c,rep_d\n";
    for (const auto& c : classes)
        os << c.trace << "," << c.norm << "," << c.multiplicity << "," << c.representative.a << ","
           << c.representative.b << "," << c.representative.c << "," << c.representative.d << "\n";
    atomic_write(path, os.str());
}

void write_counting_csv(const std::string& path, const std::vector<double>& xs) {
    std::ostringstream os;
    os.precision(15);
    os << "x,psi,pi,li_x\n";
    for (double x : xs)
        os << x << "," << psi_gamma(x) << "," << pi_gamma(x) << "," << log_integral(x) << "\n";
    atomic_write(path, os.str());
}

}  // namespace autforms
