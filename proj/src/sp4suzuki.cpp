#include "dlvar/sp4suzuki.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dlv::sp4suzuki {

namespace {

using finitegeom::symplectic_pair;

Vec basis_vec(int i)
{
    Vec v(4, 0);
    v[i] = 1;
    return v;
}

Mat form_matrix(const FqField &F)
{
    Mat j(4, Vec(4, 0));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) j[a][b] = symplectic_pair(F, basis_vec(a), basis_vec(b));
    return j;
}

Mat mat_mul(const FqField &F, const Mat &a, const Mat &b)
{
    Mat c(4, Vec(4, 0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int acc = 0;
            for (int k = 0; k < 4; ++k) acc = F.add(acc, F.mul(a[i][k], b[k][j]));
            c[i][j] = acc;
        }
    return c;
}

Vec mat_apply(const FqField &F, const Mat &m, const Vec &v)
{
    Vec out(4, 0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i] = F.add(out[i], F.mul(m[i][j], v[j]));
    return out;
}

// Index pairs of the sixteen retained 2-minors.
constexpr int PAIRS[4][2] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};

Dual dual_add(const FqField &F, Dual a, Dual b)
{
    return {F.add(a.first, b.first), F.add(a.second, b.second)};
}

Dual dual_sub(const FqField &F, Dual a, Dual b)
{
    return {F.sub(a.first, b.first), F.sub(a.second, b.second)};
}

Dual dual_mul(const FqField &F, Dual a, Dual b)
{
    return {F.mul(a.first, b.first),
            F.add(F.mul(a.first, b.second), F.mul(a.second, b.first))};
}

long long encode_vec(const FqField &F, const Vec &v)
{
    long long code = 0;
    for (int i = 3; i >= 0; --i) code = code * F.q() + v[i];
    return code;
}

Vec decode_vec(const FqField &F, long long code)
{
    Vec v(4);
    for (int i = 0; i < 4; ++i) {
        v[i] = (int)(code % F.q());
        code /= F.q();
    }
    return v;
}

} // namespace

bool is_symplectic(const FqField &F, const Mat &s)
{
    if (s.size() != 4) return false;
    Mat j = form_matrix(F);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            // (tS J S)[a][b] = <s_col_a, s_col_b>.
            Vec ca(4), cb(4);
            for (int i = 0; i < 4; ++i) {
                ca[i] = s[i][a];
                cb[i] = s[i][b];
            }
            if (symplectic_pair(F, ca, cb) != j[a][b]) return false;
        }
    return true;
}

Mat minor_isogeny(const FqField &F, const Mat &s)
{
    if (!is_symplectic(F, s)) throw std::invalid_argument("minor_isogeny: input not symplectic");
    Mat out(4, Vec(4, 0));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            int i1 = PAIRS[a][0], i2 = PAIRS[a][1];
            int j1 = PAIRS[b][0], j2 = PAIRS[b][1];
            out[a][b] = F.sub(F.mul(s[i1][j1], s[i2][j2]), F.mul(s[i1][j2], s[i2][j1]));
        }
    return out;
}

DualMat minor_isogeny_dual(const FqField &F, const DualMat &s)
{
    DualMat out(4, std::vector<Dual>(4, {0, 0}));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            int i1 = PAIRS[a][0], i2 = PAIRS[a][1];
            int j1 = PAIRS[b][0], j2 = PAIRS[b][1];
            out[a][b] = dual_sub(F, dual_mul(F, s[i1][j1], s[i2][j2]),
                                 dual_mul(F, s[i1][j2], s[i2][j1]));
        }
    return out;
}

Mat suzuki_A()
{
    // Unique matrix (up to powers) that is symplectic, phi-fixed, of order
    // five, and conjugated to its square by S.
    return {{1, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
}

Mat suzuki_S()
{
    return {{1, 1, 1, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}};
}

const SuzukiGroup &suzuki_group()
{
    static const SuzukiGroup group = [] {
        const FqField &F = FqField::get(2, 1);
        SuzukiGroup g;
        Mat id(4, Vec(4, 0));
        for (int i = 0; i < 4; ++i) id[i][i] = 1;
        g.elements = {id};
        // Closure under right multiplication by the generators.
        for (size_t head = 0; head < g.elements.size(); ++head)
            for (const Mat &gen : {suzuki_A(), suzuki_S()}) {
                Mat prod = mat_mul(F, g.elements[head], gen);
                if (std::find(g.elements.begin(), g.elements.end(), prod) == g.elements.end())
                    g.elements.push_back(prod);
            }

        int n = (int)g.elements.size();
        g.table.assign(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Mat prod = mat_mul(F, g.elements[i], g.elements[j]);
                g.table[i][j] = g.index_of(prod);
            }
        g.orders.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            int x = i, ord = 1;
            while (x != 0) {
                x = g.table[x][i];
                ++ord;
            }
            g.orders[i] = ord;
        }

        // Every subgroup here is generated by at most two elements; collect
        // closures of all singletons and pairs, then test normality.
        std::vector<int> inverse(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (g.table[i][j] == 0) inverse[i] = j;
        std::set<std::set<int>> subgroups;
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) {
                std::set<int> h = {0};
                std::vector<int> queue = {a, b};
                while (!queue.empty()) {
                    int x = queue.back();
                    queue.pop_back();
                    if (h.count(x)) continue;
                    h.insert(x);
                    for (int y : h) {
                        queue.push_back(g.table[x][y]);
                        queue.push_back(g.table[y][x]);
                    }
                    queue.push_back(inverse[x]);
                }
                subgroups.insert(h);
            }
        for (const auto &h : subgroups) {
            bool normal = true;
            for (int x = 0; x < n && normal; ++x)
                for (int y : h)
                    if (!h.count(g.table[g.table[x][y]][inverse[x]])) {
                        normal = false;
                        break;
                    }
            if (normal) g.normal_subgroup_orders.insert((int)h.size());
        }
        return g;
    }();
    return group;
}

int SuzukiGroup::index_of(const Mat &m) const
{
    auto it = std::find(elements.begin(), elements.end(), m);
    if (it == elements.end()) throw std::invalid_argument("not an element of Sz(2)");
    return (int)(it - elements.begin());
}

Mat symplectic_completion(const FlagConfig &f, int offset)
{
    if (f.kind != finitegeom::FlagKind::IsoC2)
        throw std::invalid_argument("symplectic_completion: expects an isotropic flag");
    const FqField &F = *f.field;
    Vec v1 = f.line[0];
    // Second basis vector of U outside the line.
    Vec v2;
    for (const auto &row : f.plane) {
        Mat probe = {v1, row};
        if (finitegeom::rank_of(F, probe) == 2) {
            v2 = row;
            break;
        }
    }
    if (v2.empty()) throw std::logic_error("degenerate flag");

    long long total = (long long)F.q() * F.q() * F.q() * F.q();
    std::vector<Vec> v4_candidates;
    for (long long code = 1; code < total; ++code) {
        Vec w = decode_vec(F, code);
        if (symplectic_pair(F, v1, w) == 1) v4_candidates.push_back(std::move(w));
    }
    if (v4_candidates.empty()) throw std::logic_error("completion failure");
    Vec v4 = v4_candidates[offset % v4_candidates.size()];

    Vec v3;
    for (long long code = 1; code < total; ++code) {
        Vec w = decode_vec(F, code);
        if (symplectic_pair(F, v1, w) == 0 && symplectic_pair(F, v4, w) == 0 &&
            symplectic_pair(F, v2, w) == 1) {
            v3 = std::move(w);
            break;
        }
    }
    if (v3.empty()) throw std::logic_error("completion failure");

    // Normalize <v2,v4> to zero: v4 += c*v3 leaves the other pairings alone.
    int c = F.neg(symplectic_pair(F, v2, v4));
    for (int i = 0; i < 4; ++i) v4[i] = F.add(v4[i], F.mul(c, v3[i]));

    Mat s(4, Vec(4, 0));
    const Vec *cols[4] = {&v1, &v2, &v3, &v4};
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) s[i][j] = (*cols[j])[i];
    if (!is_symplectic(F, s)) throw std::logic_error("completion is not symplectic");
    return s;
}

FlagConfig phi_on_flags(const FlagConfig &f, int offset)
{
    const FqField &F = *f.field;
    Mat image = minor_isogeny(F, symplectic_completion(f, offset));
    Vec c1(4), c2(4);
    for (int i = 0; i < 4; ++i) {
        c1[i] = image[i][0];
        c2[i] = image[i][1];
    }
    return finitegeom::make_flag(F, finitegeom::FlagKind::IsoC2, {c1}, {c1, c2});
}

FlagConfig act_on_flag(const Mat &m, const FlagConfig &f)
{
    const FqField &F = *f.field;
    Mat line = {mat_apply(F, m, f.line[0])};
    Mat plane = {mat_apply(F, m, f.plane[0]), mat_apply(F, m, f.plane[1])};
    return finitegeom::make_flag(F, f.kind, std::move(line), std::move(plane));
}

Mat sp4_block_matrix(const std::array<int, 10> &co)
{
    auto [a, b, c, d, u, v, w, x, y, z] = co;
    return {{a, b, u, v}, {c, d, w, u}, {x, y, d, b}, {z, x, c, a}};
}

long long lie_kernel_count()
{
    const FqField &F = FqField::get(2, 1);
    long long count = 0;
    for (int bits = 0; bits < 1024; ++bits) {
        std::array<int, 10> co;
        for (int i = 0; i < 10; ++i) co[i] = (bits >> i) & 1;
        Mat t = sp4_block_matrix(co);
        DualMat s(4, std::vector<Dual>(4));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) s[i][j] = {i == j ? 1 : 0, t[i][j]};
        DualMat img = minor_isogeny_dual(F, s);
        bool in_kernel = true;
        for (int i = 0; i < 4 && in_kernel; ++i)
            for (int j = 0; j < 4; ++j)
                if (img[i][j] != Dual{i == j ? 1 : 0, 0}) {
                    in_kernel = false;
                    break;
                }
        auto [a, b, c, d, u, v, w, x, y, z] = co;
        bool block_conditions = (a == d) && v == 0 && w == 0 && y == 0 && z == 0;
        if (in_kernel != block_conditions)
            throw std::logic_error("kernel does not match the block conditions");
        if (in_kernel) ++count;
    }
    return count;
}

finitegeom::Histogram c2twist_strata(int k)
{
    if (k < 1 || k > 2) throw std::invalid_argument("c2twist_strata: k in {1,2}");
    const FqField &F = FqField::get(2, k);
    auto flags = finitegeom::enumerate_flags(F, finitegeom::FlagKind::IsoC2);
    return finitegeom::strata_histogram_generic(
        flags, [](const FlagConfig &f) { return phi_on_flags(f); });
}

} // namespace dlv::sp4suzuki
