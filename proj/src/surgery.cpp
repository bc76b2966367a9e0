#include "qa/surgery.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace qa {

namespace {
using boost::multiprecision::cpp_int;
}

int SurgeryPresentation::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i].id == id) return static_cast<int>(i);
    return -1;
}

void SurgeryPresentation::validate() const {
    const std::size_t m = components.size();
    if (linking.size() != m) throw surgery_error("linking matrix dimension mismatch");
    for (std::size_t i = 0; i < m; ++i) {
        if (linking[i].size() != m) throw surgery_error("linking matrix is not square");
        if (linking[i][i] != 0) throw surgery_error("linking matrix diagonal must be zero");
        for (std::size_t j = 0; j < m; ++j)
            if (linking[i][j] != linking[j][i])
                throw surgery_error("linking matrix must be symmetric");
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (components[i].id == components[j].id)
                throw surgery_error("duplicate component id " + components[i].id);
}

SurgeryPresentation rolfsen_twist(const SurgeryPresentation& P, const std::string& u,
                                  long long t) {
    const int ui = P.index_of(u);
    if (ui < 0) throw surgery_error("no component " + u);
    if (!P.components[ui].unknotted)
        throw surgery_error("component " + u + " is not flagged unknotted");
    if (P.components[ui].coeff.is_infinite())
        throw surgery_error("cannot twist along infinity-framed " + u);
    SurgeryPresentation out = P;
    const int m = static_cast<int>(P.components.size());
    const ExtendedRational& r = P.components[ui].coeff;
    out.components[ui].coeff = ExtendedRational(r.p, r.q + t * r.p);
    for (int i = 0; i < m; ++i) {
        if (i == ui) continue;
        const long long li = P.linking[i][ui];
        if (!P.components[i].coeff.is_infinite())
            out.components[i].coeff = P.components[i].coeff + t * li * li;
        for (int j = 0; j < m; ++j) {
            if (j == ui || j == i) continue;
            out.linking[i][j] = P.linking[i][j] + t * li * P.linking[j][ui];
        }
    }
    return out;
}

SurgeryPresentation delete_infinity(const SurgeryPresentation& P, const std::string& u) {
    const int ui = P.index_of(u);
    if (ui < 0) throw surgery_error("no component " + u);
    if (!P.components[ui].coeff.is_infinite())
        throw surgery_error("component " + u + " is not infinity-framed");
    SurgeryPresentation out;
    const int m = static_cast<int>(P.components.size());
    for (int i = 0; i < m; ++i)
        if (i != ui) out.components.push_back(P.components[i]);
    for (int i = 0; i < m; ++i) {
        if (i == ui) continue;
        std::vector<long long> row;
        for (int j = 0; j < m; ++j)
            if (j != ui) row.push_back(P.linking[i][j]);
        out.linking.push_back(std::move(row));
    }
    return out;
}

namespace {

cpp_int int_det(std::vector<std::vector<cpp_int>> a) {
    const int m = static_cast<int>(a.size());
    // fraction-free elimination
    cpp_int prev = 1;
    int sign = 1;
    for (int k = 0; k < m - 1; ++k) {
        if (a[k][k] == 0) {
            int sw = -1;
            for (int r = k + 1; r < m; ++r)
                if (a[r][k] != 0) {
                    sw = r;
                    break;
                }
            if (sw < 0) return 0;
            std::swap(a[k], a[sw]);
            sign = -sign;
        }
        for (int r = k + 1; r < m; ++r)
            for (int c = k + 1; c < m; ++c)
                a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
        prev = a[k][k];
    }
    return m == 0 ? cpp_int(1) : (sign > 0 ? a[m - 1][m - 1] : -a[m - 1][m - 1]);
}

}  // namespace

long long h1_order(const SurgeryPresentation& P) {
    const int m = static_cast<int>(P.components.size());
    std::vector<std::vector<cpp_int>> a(m, std::vector<cpp_int>(m));
    for (int i = 0; i < m; ++i) {
        const auto& r = P.components[i].coeff;
        const long long p = r.is_infinite() ? 1 : r.p;
        const long long q = r.is_infinite() ? 0 : r.q;
        for (int j = 0; j < m; ++j) a[i][j] = (i == j) ? cpp_int(p) : cpp_int(q * P.linking[i][j]);
    }
    cpp_int d = int_det(std::move(a));
    if (d < 0) d = -d;
    return static_cast<long long>(d);
}

std::pair<SurgeryPresentation, ScriptReport> run_script(const TwistScript& s) {
    s.initial.validate();
    SurgeryPresentation cur = s.initial;
    ScriptReport report;
    for (std::size_t k = 0; k < s.moves.size(); ++k) {
        const TwistMove& mv = s.moves[k];
        std::string desc;
        if (mv.is_delete) {
            cur = delete_infinity(cur, mv.target);
            desc = "delete " + mv.target;
        } else {
            cur = rolfsen_twist(cur, mv.target, mv.t);
            desc = "twist " + mv.target + " by " + std::to_string(mv.t);
        }
        for (const auto& [id, want] : mv.expect) {
            const int i = cur.index_of(id);
            if (i < 0)
                throw surgery_error("move " + std::to_string(k) + ": assertion names missing " +
                                    id);
            if (cur.components[i].coeff != want)
                throw surgery_error("move " + std::to_string(k) + ": expected " + id + " = " +
                                    want.str() + ", got " + cur.components[i].coeff.str());
        }
        ScriptStep step;
        step.move_index = static_cast<int>(k);
        step.description = std::move(desc);
        for (const auto& c : cur.components) step.coeffs[c.id] = c.coeff;
        report.steps.push_back(std::move(step));
    }
    return {std::move(cur), std::move(report)};
}

// ---------------------------------------------------------------------------
// Linking-matrix fitting
// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxComp = 6;

struct CompiledMove {
    int target;
    long long t;
    bool del;
    // (component index, expected p, expected q) after this move
    std::vector<std::array<long long, 3>> expect;
};

struct CompiledScript {
    long long p0[kMaxComp], q0[kMaxComp];
    bool unknot[kMaxComp];
    std::vector<CompiledMove> moves;
};

struct CompiledProblem {
    int m = 0;
    std::vector<CompiledScript> scripts;
    std::vector<FitAssignment> assignments;
};

CompiledProblem compile(const FitProblem& prob) {
    CompiledProblem out;
    out.m = prob.component_count;
    if (out.m > kMaxComp) throw surgery_error("too many components for fitting");
    for (const TwistScript& s : prob.scripts) {
        if (static_cast<int>(s.initial.components.size()) != out.m)
            throw surgery_error("fit script component count mismatch");
        CompiledScript cs;
        for (int i = 0; i < out.m; ++i) {
            const auto& c = s.initial.components[i];
            cs.p0[i] = c.coeff.is_infinite() ? 1 : c.coeff.p;
            cs.q0[i] = c.coeff.is_infinite() ? 0 : c.coeff.q;
            cs.unknot[i] = c.unknotted;
        }
        for (const TwistMove& mv : s.moves) {
            CompiledMove cm;
            cm.target = s.initial.index_of(mv.target);
            if (cm.target < 0) throw surgery_error("fit script move targets unknown component");
            cm.t = mv.t;
            cm.del = mv.is_delete;
            for (const auto& [id, want] : mv.expect) {
                const int i = s.initial.index_of(id);
                if (i < 0) throw surgery_error("fit script assertion names unknown component");
                cm.expect.push_back({static_cast<long long>(i),
                                     want.is_infinite() ? 1 : want.p,
                                     want.is_infinite() ? 0 : want.q});
            }
            cs.moves.push_back(std::move(cm));
        }
        out.scripts.push_back(std::move(cs));
    }
    out.assignments = prob.assignments;
    for (const auto& a : out.assignments)
        if (static_cast<int>(a.coeffs.size()) != out.m)
            throw surgery_error("fit assignment coefficient count mismatch");
    return out;
}

void normalize(long long& p, long long& q) {
    if (q == 0) {
        p = 1;
        return;
    }
    if (q < 0) {
        p = -p;
        q = -q;
    }
    const long long g = std::gcd(std::llabs(p), q);
    if (g > 1) {
        p /= g;
        q /= g;
    }
    if (p == 0) q = 1;
}

// Determinant of a small integer matrix by Laplace expansion; entries stay
// far below overflow for the fitting sizes (m <= 4, small values).
long long small_det(const long long a[kMaxComp][kMaxComp], const int* rows, const int* cols,
                    int m) {
    if (m == 1) return a[rows[0]][cols[0]];
    if (m == 2)
        return a[rows[0]][cols[0]] * a[rows[1]][cols[1]] -
               a[rows[0]][cols[1]] * a[rows[1]][cols[0]];
    long long det = 0;
    int sub[kMaxComp];
    for (int k = 0; k < m; ++k) {
        int idx = 0;
        for (int r = 1; r < m; ++r) sub[idx++] = rows[r];
        int subcols[kMaxComp];
        idx = 0;
        for (int c = 0; c < m; ++c)
            if (c != k) subcols[idx++] = cols[c];
        const long long term = a[rows[0]][cols[k]] * small_det(a, sub, subcols, m - 1);
        det += (k % 2 == 0) ? term : -term;
    }
    return det;
}

bool check_candidate(const CompiledProblem& cp, const long long lk[kMaxComp][kMaxComp]) {
    const int m = cp.m;
    for (const auto& a : cp.assignments) {
        long long mat[kMaxComp][kMaxComp];
        for (int i = 0; i < m; ++i) {
            const long long p = a.coeffs[i].is_infinite() ? 1 : a.coeffs[i].p;
            const long long q = a.coeffs[i].is_infinite() ? 0 : a.coeffs[i].q;
            for (int j = 0; j < m; ++j) mat[i][j] = (i == j) ? p : q * lk[i][j];
        }
        int idx[kMaxComp];
        std::iota(idx, idx + m, 0);
        if (std::llabs(small_det(mat, idx, idx, m)) != a.slope) return false;
    }
    for (const auto& cs : cp.scripts) {
        long long p[kMaxComp], q[kMaxComp], l[kMaxComp][kMaxComp];
        bool alive[kMaxComp];
        for (int i = 0; i < m; ++i) {
            p[i] = cs.p0[i];
            q[i] = cs.q0[i];
            alive[i] = true;
            for (int j = 0; j < m; ++j) l[i][j] = lk[i][j];
        }
        for (const auto& mv : cs.moves) {
            const int u = mv.target;
            if (!alive[u]) return false;
            if (mv.del) {
                if (q[u] != 0) return false;
                alive[u] = false;
            } else {
                if (q[u] == 0 || !cs.unknot[u]) return false;
                long long lam[kMaxComp];
                for (int i = 0; i < m; ++i) lam[i] = l[i][u];
                q[u] += mv.t * p[u];
                normalize(p[u], q[u]);
                for (int i = 0; i < m; ++i) {
                    if (i == u || !alive[i]) continue;
                    if (q[i] != 0) {
                        p[i] += mv.t * lam[i] * lam[i] * q[i];
                        normalize(p[i], q[i]);
                    }
                    for (int j = 0; j < m; ++j) {
                        if (j == u || j == i || !alive[j]) continue;
                        l[i][j] += mv.t * lam[i] * lam[j];
                    }
                }
            }
            for (const auto& e : mv.expect) {
                const int i = static_cast<int>(e[0]);
                if (!alive[i] || p[i] != e[1] || q[i] != e[2]) return false;
            }
        }
    }
    return true;
}

std::vector<std::vector<std::vector<long long>>> fit_impl(const FitProblem& prob,
                                                          bool parallel) {
    const int m = prob.component_count;
    if (m < 0 || m > kMaxComp) throw surgery_error("unsupported component count");
    std::vector<std::vector<std::vector<long long>>> solutions;
    if (m <= 1) {
        // nothing to fit; the empty/1x1 zero matrix trivially satisfies
        solutions.push_back(std::vector<std::vector<long long>>(m, std::vector<long long>(m, 0)));
        return solutions;
    }
    const CompiledProblem cp = compile(prob);
    const long long bound = prob.bound;
    const int k = m * (m - 1) / 2;
    const long long range = 2 * bound + 1;
    long long total = 1;
    for (int i = 0; i < k; ++i) total *= range;

    auto to_matrix = [&](long long code) {
        long long lk[kMaxComp][kMaxComp] = {};
        long long c = code;
        for (int i = m - 1; i >= 0; --i)
            for (int j = m - 1; j > i; --j) {
                const long long v = c % range - bound;
                c /= range;
                lk[i][j] = lk[j][i] = v;
            }
        std::vector<std::vector<long long>> out(m, std::vector<long long>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) out[i][j] = lk[i][j];
        return out;
    };

    auto check_code = [&](long long code) {
        long long lk[kMaxComp][kMaxComp] = {};
        long long c = code;
        for (int i = m - 1; i >= 0; --i)
            for (int j = m - 1; j > i; --j) {
                const long long v = c % range - bound;
                c /= range;
                lk[i][j] = lk[j][i] = v;
            }
        return check_candidate(cp, lk);
    };

    if (parallel) {
        std::vector<std::vector<long long>> hits_per_chunk(range);
#pragma omp parallel for schedule(dynamic)
        for (long long outer = 0; outer < range; ++outer) {
            const long long chunk = total / range;
            for (long long inner = 0; inner < chunk; ++inner) {
                const long long code = outer * chunk + inner;
                if (check_code(code)) hits_per_chunk[outer].push_back(code);
            }
        }
        for (const auto& hits : hits_per_chunk)
            for (long long code : hits) solutions.push_back(to_matrix(code));
    } else {
        for (long long code = 0; code < total; ++code)
            if (check_code(code)) solutions.push_back(to_matrix(code));
    }
    std::sort(solutions.begin(), solutions.end());
    return solutions;
}

}  // namespace

std::vector<std::vector<std::vector<long long>>> fit_linking_matrix(const FitProblem& prob) {
    return fit_impl(prob, true);
}

std::vector<std::vector<std::vector<long long>>> fit_linking_matrix_serial(
    const FitProblem& prob) {
    return fit_impl(prob, false);
}

}  // namespace qa
