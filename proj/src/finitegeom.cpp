#include "dlvar/finitegeom.hpp"

#include "dlvar/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dlv::finitegeom {

namespace {

std::pair<long long, int> split_pk(long long q)
{
    for (long long p : {2LL, 3LL, 5LL, 7LL}) {
        if (q % p) continue;
        int s = 0;
        long long m = q;
        while (m % p == 0) {
            m /= p;
            ++s;
        }
        if (m == 1) return {p, s};
    }
    throw std::invalid_argument("q is not a prime power in range");
}

// The 4x4 alternating form: <e0,e3> = <e1,e2> = 1, skew elsewhere.
int form_entry(const FqField &F, int i, int j)
{
    if (i == 0 && j == 3) return 1;
    if (i == 1 && j == 2) return 1;
    if (i == 3 && j == 0) return F.neg(1);
    if (i == 2 && j == 1) return F.neg(1);
    return 0;
}

Vec decode_vec(const FqField &F, long long code, int n)
{
    Vec v(n);
    for (int i = 0; i < n; ++i) {
        v[i] = (int)(code % F.q());
        code /= F.q();
    }
    return v;
}

// Solve rows * w = 0; returns a basis of the null space.
Mat nullspace(const FqField &F, Mat rows, int n)
{
    rref(F, rows);
    std::vector<int> pivot_col;
    for (const auto &r : rows) {
        int c = 0;
        while (c < n && r[c] == 0) ++c;
        pivot_col.push_back(c);
    }
    Mat basis;
    for (int f = 0; f < n; ++f) {
        if (std::find(pivot_col.begin(), pivot_col.end(), f) != pivot_col.end()) continue;
        Vec v(n, 0);
        v[f] = 1;
        for (size_t r = 0; r < rows.size(); ++r) v[pivot_col[r]] = F.neg(rows[r][f]);
        basis.push_back(std::move(v));
    }
    return basis;
}

int intersection_dim(const FqField &F, const Mat &a, const Mat &b)
{
    Mat stacked = a;
    stacked.insert(stacked.end(), b.begin(), b.end());
    return (int)a.size() + (int)b.size() - rank_of(F, std::move(stacked));
}

Mat perp_c2(const FqField &F, const Mat &space)
{
    Mat rows;
    for (const auto &v : space) {
        Vec row(4, 0);
        for (int j = 0; j < 4; ++j) {
            int acc = 0;
            for (int i = 0; i < 4; ++i) acc = F.add(acc, F.mul(v[i], form_entry(F, i, j)));
            row[j] = acc;
        }
        rows.push_back(std::move(row));
    }
    return nullspace(F, rows, 4);
}

// Profile tables: for each Weyl element w the matrix prof[i][j] counting
// {nu <= j : w(nu) <= i}, from the permutation realization of the word
// s_{i1}...s_{il} acting as w(x) = s_{i1}(s_{i2}(...x)).
struct ProfileEntry {
    std::vector<std::vector<int>> profile;
    rootcore::WeylElement w;
};

std::vector<int> word_to_perm(const std::vector<int> &word, FlagKind kind)
{
    int m = (kind == FlagKind::FullA) ? 3 : 4;
    auto apply_gen = [&](int letter, int x) {
        if (kind == FlagKind::FullA) {
            if (letter == 1) return x == 0 ? 1 : (x == 1 ? 0 : x);
            return x == 1 ? 2 : (x == 2 ? 1 : x);
        }
        if (letter == 1) return x ^ 1; // (12)(34) in 1-based labels
        return x == 1 ? 2 : (x == 2 ? 1 : x);
    };
    std::vector<int> perm(m);
    for (int x = 0; x < m; ++x) {
        int val = x;
        for (int j = (int)word.size() - 1; j >= 0; --j) val = apply_gen(word[j], val);
        perm[x] = val;
    }
    return perm;
}

const std::vector<ProfileEntry> &profile_table(FlagKind kind)
{
    static std::vector<ProfileEntry> full_a, iso_c2;
    auto build = [&](const char *type) {
        auto rs = rootcore::build_root_system(rootcore::cartan_matrix(type));
        std::vector<ProfileEntry> table;
        int m = (kind == FlagKind::FullA) ? 3 : 4;
        int depth = m - 1; // proper subspaces F_1..F_{m-1}
        for (const auto &w : rootcore::weyl_group(rs)) {
            auto perm = word_to_perm(w.word, kind);
            std::vector<std::vector<int>> prof(depth, std::vector<int>(depth, 0));
            for (int i = 1; i <= depth; ++i)
                for (int j = 1; j <= depth; ++j) {
                    int count = 0;
                    for (int nu = 0; nu < j; ++nu)
                        if (perm[nu] < i) ++count;
                    prof[i - 1][j - 1] = count;
                }
            table.push_back({std::move(prof), w});
        }
        return table;
    };
    if (kind == FlagKind::FullA) {
        if (full_a.empty()) full_a = build("A2");
        return full_a;
    }
    if (iso_c2.empty()) iso_c2 = build("C2");
    return iso_c2;
}

std::vector<Mat> flag_chain(const FlagConfig &f)
{
    if (f.kind == FlagKind::FullA) return {f.line, f.plane};
    return {f.line, f.plane, perp_c2(*f.field, f.line)};
}

// Enumerate normalized projective representatives in F^n (first nonzero 1).
std::vector<Vec> projective_points(const FqField &F, int n)
{
    std::vector<Vec> pts;
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= F.q();
    for (long long code = 1; code < total; ++code) {
        Vec v = decode_vec(F, code, n);
        int lead = 0;
        while (v[lead] == 0) ++lead;
        if (v[lead] != 1) continue;
        pts.push_back(std::move(v));
    }
    return pts;
}

} // namespace

int rref(const FqField &F, Mat &m)
{
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        int inv = F.inv(m[r][c]);
        for (int j = 0; j < cols; ++j) m[r][j] = F.mul(m[r][j], inv);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            int f = m[i][c];
            for (int j = 0; j < cols; ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[r][j]));
        }
        ++r;
    }
    m.resize(r);
    return r;
}

int rank_of(const FqField &F, Mat m)
{
    return rref(F, m);
}

int symplectic_pair(const FqField &F, const Vec &u, const Vec &v)
{
    int acc = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            acc = F.add(acc, F.mul(u[i], F.mul(form_entry(F, i, j), v[j])));
    return acc;
}

FlagConfig make_flag(const FqField &F, FlagKind kind, Mat line, Mat plane)
{
    int n = (kind == FlagKind::FullA) ? 3 : 4;
    if (line.size() != 1 || plane.size() != 2 || (int)line[0].size() != n ||
        (int)plane[0].size() != n || (int)plane[1].size() != n)
        throw std::invalid_argument("make_flag: wrong shapes");
    if (rref(F, line) != 1 || rref(F, plane) != 2)
        throw std::invalid_argument("make_flag: degenerate subspaces");
    if (intersection_dim(F, line, plane) != 1)
        throw std::invalid_argument("make_flag: line not contained in plane");
    if (kind == FlagKind::IsoC2 && symplectic_pair(F, plane[0], plane[1]) != 0)
        throw std::invalid_argument("make_flag: plane not isotropic");
    return {&F, kind, std::move(line), std::move(plane)};
}

std::vector<FlagConfig> enumerate_flags(const FqField &F, FlagKind kind)
{
    int n = (kind == FlagKind::FullA) ? 3 : 4;
    long long q = F.q();
    long long vecs = 1;
    for (int i = 0; i < n; ++i) vecs *= q;
    check_enum_budget(vecs * vecs / std::max(1LL, q));

    std::vector<FlagConfig> flags;
    for (const auto &pt : projective_points(F, n)) {
        Mat line = {pt};
        std::set<Mat> planes;
        if (kind == FlagKind::FullA) {
            // Planes through the line = dual points y with pt.y = 0.
            for (const auto &y : projective_points(F, n)) {
                int dot = 0;
                for (int i = 0; i < n; ++i) dot = F.add(dot, F.mul(pt[i], y[i]));
                if (dot != 0) continue;
                Mat plane = nullspace(F, Mat{y}, n);
                rref(F, plane);
                planes.insert(plane);
            }
        } else {
            for (const auto &w : projective_points(F, n)) {
                if (symplectic_pair(F, pt, w) != 0) continue;
                Mat plane = {pt, w};
                if (rref(F, plane) != 2) continue;
                planes.insert(plane);
            }
        }
        for (auto &plane : planes)
            flags.push_back({&F, kind, line, plane});
    }
    std::sort(flags.begin(), flags.end());
    return flags;
}

rootcore::WeylElement relative_position(const FlagConfig &f, const FlagConfig &g)
{
    if (f.kind != g.kind || f.field != g.field)
        throw std::invalid_argument("relative_position: mismatched flags");
    const FqField &F = *f.field;
    auto cf = flag_chain(f);
    auto cg = flag_chain(g);
    int depth = (int)cf.size();
    std::vector<std::vector<int>> dims(depth, std::vector<int>(depth));
    for (int i = 0; i < depth; ++i)
        for (int j = 0; j < depth; ++j) dims[i][j] = intersection_dim(F, cf[i], cg[j]);
    for (const auto &entry : profile_table(f.kind))
        if (entry.profile == dims) return entry.w;
    throw std::logic_error("relative_position: no profile matched");
}

Histogram strata_histogram_generic(const std::vector<FlagConfig> &flags,
                                   const std::function<FlagConfig(const FlagConfig &)> &phi)
{
    Histogram hist;
    for (const auto &f : flags) ++hist[relative_position(f, phi(f)).word];
    return hist;
}

FlagConfig frobenius_flag(const FlagConfig &f, long long q)
{
    const FqField &F = *f.field;
    auto powq = [&](Mat m) {
        for (auto &row : m)
            for (auto &x : row) x = F.pow(x, q);
        return m;
    };
    return make_flag(F, f.kind, powq(f.line), powq(f.plane));
}

FlagConfig unitary_phi(const FlagConfig &f, long long q)
{
    if (f.kind != FlagKind::FullA)
        throw std::invalid_argument("unitary_phi: expects a full A2 flag");
    const FqField &F = *f.field;
    auto [p, s] = split_pk(q);
    if (p != F.p() || F.k() % (2 * s) != 0)
        throw std::invalid_argument("unitary_phi: field lacks the q-involution");

    // <u,v> = sum_i u_i^q v_{2-i}; perp rows carry the q-twist of the basis.
    auto perp = [&](const Mat &space) {
        Mat rows;
        for (const auto &u : space) {
            Vec row(3);
            for (int j = 0; j < 3; ++j) row[j] = F.pow(u[2 - j], q);
            rows.push_back(std::move(row));
        }
        return nullspace(F, rows, 3);
    };
    return make_flag(F, FlagKind::FullA, perp(f.plane), perp(f.line));
}

Histogram strata_histogram(const std::string &case_key, long long q, int ext)
{
    auto [p, s] = split_pk(q);
    int k_total = s * ext;
    if (k_total > 6) throw std::invalid_argument("strata_histogram: field too large");
    const FqField &F = FqField::get((int)p, k_total);
    if (case_key == "A2") {
        auto flags = enumerate_flags(F, FlagKind::FullA);
        return strata_histogram_generic(flags,
                                        [&](const FlagConfig &f) { return frobenius_flag(f, q); });
    }
    if (case_key == "2A2") {
        if (k_total % (2 * s) != 0)
            throw std::invalid_argument("strata_histogram: 2A2 needs an even extension");
        auto flags = enumerate_flags(F, FlagKind::FullA);
        return strata_histogram_generic(flags,
                                        [&](const FlagConfig &f) { return unitary_phi(f, q); });
    }
    throw std::invalid_argument("strata_histogram: unsupported case " + case_key);
}

long long hermitian_count(long long q, int k)
{
    auto [p, s] = split_pk(q);
    if (s * k > 6) throw std::invalid_argument("hermitian_count: field too large");
    const FqField &F = FqField::get((int)p, s * k);
    long long count = 0;
    for (const auto &v : projective_points(F, 3)) {
        int lhs = F.mul(F.pow(v[0], q), v[2]);
        lhs = F.add(lhs, F.pow(v[1], q + 1));
        lhs = F.add(lhs, F.mul(F.pow(v[2], q), v[0]));
        if (lhs == 0) ++count;
    }
    return count;
}

bool surface_equations_check(long long q, int k)
{
    auto [p, s] = split_pk(q);
    if (s * k > 6) throw std::invalid_argument("surface_equations_check: field too large");
    const FqField &F = FqField::get((int)p, s * k);
    auto pts = projective_points(F, 3);
    check_enum_budget((long long)pts.size() * (long long)pts.size());

    std::set<std::pair<Vec, Vec>> cut_out, flag_side;
    for (const auto &x : pts)
        for (const auto &y : pts) {
            int dot = 0;
            for (int i = 0; i < 3; ++i) dot = F.add(dot, F.mul(x[i], y[i]));
            if (dot != 0) continue; // both descriptions require L inside U

            int eq2 = F.mul(y[0], F.pow(y[2], q));
            eq2 = F.sub(eq2, F.pow(y[1], q + 1));
            eq2 = F.add(eq2, F.mul(y[2], F.pow(y[0], q)));
            if (eq2 == 0) cut_out.insert({x, y});

            // U = {v : y.v = 0}; U-perp under <u,v> = sum u_i^q v_{2-i}.
            Mat ubasis = nullspace(F, Mat{y}, 3);
            Mat rows;
            for (const auto &u : ubasis) {
                Vec row(3);
                for (int j = 0; j < 3; ++j) row[j] = F.pow(u[2 - j], q);
                rows.push_back(std::move(row));
            }
            Mat uperp = nullspace(F, rows, 3);
            Mat stacked = ubasis;
            stacked.insert(stacked.end(), uperp.begin(), uperp.end());
            if (rank_of(F, std::move(stacked)) == 2) flag_side.insert({x, y});
        }
    return cut_out == flag_side;
}

IncidenceGraph building_sp4(int p)
{
    if (p != 2 && p != 3) throw std::invalid_argument("building_sp4: p must be 2 or 3");
    const FqField &F = FqField::get(p, 1);

    std::vector<Mat> lines, planes;
    for (const auto &pt : projective_points(F, 4)) {
        Mat line = {pt};
        rref(F, line);
        lines.push_back(line);
    }
    std::set<Mat> plane_set;
    for (const auto &u : projective_points(F, 4))
        for (const auto &w : projective_points(F, 4)) {
            if (symplectic_pair(F, u, w) != 0) continue;
            Mat plane = {u, w};
            if (rref(F, plane) != 2) continue;
            plane_set.insert(plane);
        }
    planes.assign(plane_set.begin(), plane_set.end());

    IncidenceGraph g;
    g.tag.assign(lines.size() + planes.size(), 0);
    for (size_t i = 0; i < planes.size(); ++i) g.tag[lines.size() + i] = 1;
    g.adj.assign(g.tag.size(), {});
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = 0; j < planes.size(); ++j) {
            Mat stacked = lines[i];
            stacked.insert(stacked.end(), planes[j].begin(), planes[j].end());
            if (rank_of(F, std::move(stacked)) != 2) continue;
            int a = (int)i, b = (int)(lines.size() + j);
            g.edges.push_back({a, b});
            g.adj[a].push_back(b);
            g.adj[b].push_back(a);
        }
    return g;
}

int girth(const IncidenceGraph &g)
{
    int best = -1;
    int n = g.vertex_count();
    for (int root = 0; root < n; ++root) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::queue<int> bfs;
        dist[root] = 0;
        bfs.push(root);
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            for (int v : g.adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    bfs.push(v);
                } else if (v != parent[u]) {
                    int cycle = dist[u] + dist[v] + 1;
                    if (best < 0 || cycle < best) best = cycle;
                }
            }
        }
    }
    return best;
}

bool is_connected(const IncidenceGraph &g)
{
    int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> bfs;
    seen[0] = 1;
    bfs.push(0);
    int reached = 1;
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int v : g.adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                bfs.push(v);
            }
    }
    return reached == n;
}

bool is_bipartite_by_tag(const IncidenceGraph &g)
{
    for (auto [u, v] : g.edges)
        if (g.tag[u] == g.tag[v]) return false;
    return true;
}

IncidenceGraph gamma_graph()
{
    const auto &edges = lattice::gamma_edges();
    IncidenceGraph g;
    g.tag.assign(22, -1);
    g.adj.assign(22, {});
    for (auto [u, v] : edges) {
        g.edges.push_back({u, v});
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    // 2-color the tree so the tag bipartition matches the building's.
    std::queue<int> bfs;
    g.tag[0] = 0;
    bfs.push(0);
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int v : g.adj[u])
            if (g.tag[v] < 0) {
                g.tag[v] = 1 - g.tag[u];
                bfs.push(v);
            }
    }
    return g;
}

std::optional<std::vector<int>> find_gamma_embedding(const IncidenceGraph &g)
{
    auto gamma = gamma_graph();
    int gn = gamma.vertex_count();
    int hn = g.vertex_count();

    // DFS order so every vertex after the first attaches to an earlier parent.
    std::vector<int> order, parent_of(gn, -1);
    {
        std::vector<char> seen(gn, 0);
        std::queue<int> bfs;
        seen[18] = 1; // rho, a degree-3 hub: constrains the search early
        bfs.push(18);
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            order.push_back(u);
            for (int v : gamma.adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    parent_of[v] = u;
                    bfs.push(v);
                }
        }
    }

    std::vector<std::vector<char>> host_adj(hn, std::vector<char>(hn, 0));
    for (auto [u, v] : g.edges) host_adj[u][v] = host_adj[v][u] = 1;

    std::vector<int> assign(gn, -1);
    std::vector<char> used(hn, 0);

    std::function<bool(size_t)> place = [&](size_t idx) -> bool {
        if (idx == order.size()) return true;
        int gv = order[idx];
        int par = parent_of[gv];
        std::vector<int> candidates;
        if (par < 0) {
            for (int h = 0; h < hn; ++h) candidates.push_back(h);
        } else {
            candidates = g.adj[assign[par]];
        }
        for (int h : candidates) {
            if (used[h]) continue;
            if ((int)g.adj[h].size() < (int)gamma.adj[gv].size()) continue;
            bool ok = true;
            for (size_t prev = 0; prev < idx && ok; ++prev) {
                int gu = order[prev];
                bool want = (gu == par); // Gamma is a tree: only the parent edge
                if ((bool)host_adj[assign[gu]][h] != want) ok = false;
            }
            if (!ok) continue;
            assign[gv] = h;
            used[h] = 1;
            if (place(idx + 1)) return true;
            used[h] = 0;
            assign[gv] = -1;
        }
        return false;
    };

    if (!place(0)) return std::nullopt;
    return assign;
}

long long ree_affine_count(int k)
{
    if (k < 1 || k > 4) throw std::invalid_argument("ree_affine_count: k in 1..4");
    const FqField &F = FqField::get(3, k);
    long long count = 0;
    long long q = F.q();
    check_enum_budget(q * q * q);
    for (int x = 0; x < q; ++x) {
        int rhs_y = F.mul(x, F.sub(F.pow(x, 3), x));
        for (int y = 0; y < q; ++y) {
            if (F.sub(F.pow(y, 3), y) != rhs_y) continue;
            int rhs_z = F.mul(x, rhs_y);
            for (int z = 0; z < q; ++z)
                if (F.sub(F.pow(z, 3), z) == rhs_z) ++count;
        }
    }
    return count;
}

long long ree_point_count(int k)
{
    // One point above infinity: the cover is totally ramified there.
    return ree_affine_count(k) + 1;
}

std::string to_dot(const IncidenceGraph &g)
{
    std::ostringstream out;
    out << "graph building {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "  v" << v << " [shape=" << (g.tag[v] ? "box" : "circle") << "];\n";
    for (auto [u, v] : g.edges) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_edge_list(const IncidenceGraph &g)
{
    std::ostringstream out;
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

long long max_enum()
{
    if (const char *env = std::getenv("DLVAR_MAX_ENUM")) {
        char *end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 10'000'000;
}

void check_enum_budget(long long states)
{
    if (states > max_enum())
        throw std::runtime_error("enumeration guardrail exceeded (see DLVAR_MAX_ENUM)");
}

} // namespace dlv::finitegeom
