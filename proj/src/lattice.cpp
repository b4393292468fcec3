#include "dlvar/lattice.hpp"

#include <numeric>
#include <stdexcept>

namespace dlv::lattice {

namespace {

void check_symmetric(const IntLattice &L)
{
    int n = L.rank();
    for (int i = 0; i < n; ++i) {
        if ((int)L.gram[i].size() != n) throw std::invalid_argument("gram not square");
        for (int j = 0; j < i; ++j)
            if (L.gram[i][j] != L.gram[j][i]) throw std::invalid_argument("gram not symmetric");
    }
}

// Smith normal form: returns (d, V) with U*G*V = diag(d) for some unimodular
// U; V is accumulated so kernel vectors can be read off the zero columns.
std::pair<std::vector<Int>, Mat> smith_with_right_transform(Mat a)
{
    int n = (int)a.size();
    int m = n ? (int)a[0].size() : 0;
    Mat v(m, std::vector<Int>(m, 0));
    for (int i = 0; i < m; ++i) v[i][i] = 1;

    auto swap_rows = [&](int i, int j) { std::swap(a[i], a[j]); };
    auto swap_cols = [&](int i, int j) {
        for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
        for (int r = 0; r < m; ++r) std::swap(v[r][i], v[r][j]);
    };
    auto add_row = [&](int dst, int src, const Int &f) {
        for (int c = 0; c < m; ++c) a[dst][c] += f * a[src][c];
    };
    auto add_col = [&](int dst, int src, const Int &f) {
        for (int r = 0; r < n; ++r) a[r][dst] += f * a[r][src];
        for (int r = 0; r < m; ++r) v[r][dst] += f * v[r][src];
    };

    int rank = std::min(n, m);
    int t = 0;
    auto reduce = [&] {
        t = 0;
        while (t < rank) {
            // Find a nonzero pivot in the trailing block.
            int pi = -1, pj = -1;
            Int best = 0;
            for (int i = t; i < n; ++i)
                for (int j = t; j < m; ++j)
                    if (a[i][j] != 0 && (pi < 0 || abs(a[i][j]) < best)) {
                        best = abs(a[i][j]);
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) break;
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (int i = t + 1; i < n; ++i)
                    if (a[i][t] != 0) {
                        Int q = a[i][t] / a[t][t];
                        add_row(i, t, -q);
                        if (a[i][t] != 0) {
                            swap_rows(t, i);
                            dirty = true;
                        }
                    }
                for (int j = t + 1; j < m; ++j)
                    if (a[t][j] != 0) {
                        Int q = a[t][j] / a[t][t];
                        add_col(j, t, -q);
                        if (a[t][j] != 0) {
                            swap_cols(t, j);
                            dirty = true;
                        }
                    }
            }
            ++t;
        }
    };

    // Reduce, then enforce the divisibility chain d_i | d_{i+1}: folding
    // column j into column i puts gcd(d_i, d_j) within reach of the next
    // reduction pass, and |d_i| strictly drops, so this terminates.
    reduce();
    for (bool chained = false; !chained;) {
        chained = true;
        for (int i = 0; i < t && chained; ++i)
            for (int j = i + 1; j < t; ++j)
                if (a[j][j] % a[i][i] != 0) {
                    add_col(i, j, 1);
                    reduce();
                    chained = false;
                    break;
                }
    }

    std::vector<Int> d(std::min(n, m), 0);
    for (int i = 0; i < t; ++i) d[i] = abs(a[i][i]);
    return {d, v};
}

} // namespace

const std::vector<std::string> &gamma_vertex_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (int i = 0; i <= 8; ++i) v.push_back("gamma" + std::to_string(i));
        for (int i = 0; i <= 8; ++i) v.push_back("delta" + std::to_string(i));
        v.push_back("rho");
        for (int i = 0; i <= 2; ++i) v.push_back("eps" + std::to_string(i));
        return v;
    }();
    return names;
}

const std::vector<std::pair<int, int>> &gamma_edges()
{
    // gamma_i = i, delta_i = 9+i, rho = 18, eps_i = 19+i. Each nine-vertex
    // branch is an affine E8 diagram (chain 1-3-4-5-6-7-8-0 with 2 hung on 4),
    // both joined to rho through their 0 node, plus the eps tail.
    static const std::vector<std::pair<int, int>> edges = [] {
        std::vector<std::pair<int, int>> e;
        for (int base : {0, 9}) {
            e.push_back({base + 1, base + 3});
            e.push_back({base + 3, base + 4});
            e.push_back({base + 2, base + 4});
            e.push_back({base + 4, base + 5});
            e.push_back({base + 5, base + 6});
            e.push_back({base + 6, base + 7});
            e.push_back({base + 7, base + 8});
            e.push_back({base + 8, base + 0});
            e.push_back({base + 0, 18});
        }
        e.push_back({18, 19});
        e.push_back({19, 20});
        e.push_back({20, 21});
        return e;
    }();
    return edges;
}

IntLattice gamma_lattice()
{
    IntLattice L;
    L.gram.assign(22, std::vector<Int>(22, 0));
    for (int i = 0; i < 22; ++i) L.gram[i][i] = -2;
    for (auto [u, v] : gamma_edges()) L.gram[u][v] = L.gram[v][u] = 1;
    return L;
}

std::vector<Int> gamma_vector_a()
{
    // 2g1+3g2+4g3+6g4+5g5+4g6+3g7+2g8+g0: the affine E8 marks.
    std::vector<Int> a(22, 0);
    const int marks[9] = {1, 2, 3, 4, 6, 5, 4, 3, 2};
    for (int i = 0; i <= 8; ++i) a[i] = marks[i];
    return a;
}

std::vector<Int> gamma_vector_b()
{
    std::vector<Int> b(22, 0);
    const int marks[9] = {1, 2, 3, 4, 6, 5, 4, 3, 2};
    for (int i = 0; i <= 8; ++i) b[9 + i] = marks[i];
    return b;
}

std::vector<Int> gamma_vector_rho()
{
    std::vector<Int> r(22, 0);
    r[18] = 1;
    return r;
}

Signature signature(const IntLattice &L)
{
    check_symmetric(L);
    int n = L.rank();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rat(L.gram[i][j]);

    Signature sig;
    for (int t = 0; t < n; ++t) {
        // Want a nonzero diagonal pivot at (t,t); symmetric swaps first, then
        // the row+col addition trick if the diagonal block is all zero.
        int pivot = -1;
        for (int i = t; i < n; ++i)
            if (a[i][i] != Rat(0)) {
                pivot = i;
                break;
            }
        if (pivot < 0) {
            int pi = -1, pj = -1;
            for (int i = t; i < n && pi < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (a[i][j] != Rat(0)) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi < 0) {
                sig.zero = n - t;
                break;
            }
            // Congruence by (row pi += row pj, col pi += col pj) makes the
            // diagonal entry 2*a[pi][pj] != 0 in characteristic zero.
            for (int c = 0; c < n; ++c) a[pi][c] += a[pj][c];
            for (int r = 0; r < n; ++r) a[r][pi] += a[r][pj];
            pivot = pi;
        }
        if (pivot != t) {
            std::swap(a[pivot], a[t]);
            for (int r = 0; r < n; ++r) std::swap(a[r][pivot], a[r][t]);
        }
        Rat d = a[t][t];
        if (d > Rat(0))
            ++sig.plus;
        else
            ++sig.minus;
        for (int i = t + 1; i < n; ++i) {
            if (a[i][t] == Rat(0)) continue;
            Rat f = a[i][t] / d;
            for (int c = 0; c < n; ++c) a[i][c] -= f * a[t][c];
            for (int r = 0; r < n; ++r) a[r][i] -= f * a[r][t];
        }
    }
    return sig;
}

std::vector<std::vector<Int>> radical_basis(const IntLattice &L)
{
    check_symmetric(L);
    auto [d, v] = smith_with_right_transform(L.gram);
    int n = L.rank();
    std::vector<std::vector<Int>> basis;
    for (int j = 0; j < n; ++j) {
        if (j < (int)d.size() && d[j] != 0) continue;
        std::vector<Int> col(n);
        for (int r = 0; r < n; ++r) col[r] = v[r][j];
        basis.push_back(std::move(col));
    }
    return basis;
}

IntLattice gram_S(int n, const Int &c)
{
    if (n < 0 || n > 2) throw std::invalid_argument("gram_S: n must be 0, 1 or 2");
    Int d0 = (n == 0), d1 = (n == 1), d2 = (n == 2);
    IntLattice L;
    L.gram = {{-2, 1, 0, 1, 1, d0},
              {1, -2, 1, 0, 0, d1},
              {0, 1, -2, 1, 0, d2},
              {1, 0, 1, -2, 0, 0},
              {1, 0, 0, 0, -2, c},
              {d0, d1, d2, 0, c, -2}};
    return L;
}

Int det(const IntLattice &L)
{
    check_symmetric(L);
    int n = L.rank();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rat(L.gram[i][j]);
    Rat result(1);
    for (int t = 0; t < n; ++t) {
        int pivot = -1;
        for (int i = t; i < n; ++i)
            if (a[i][t] != Rat(0)) {
                pivot = i;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != t) {
            std::swap(a[pivot], a[t]);
            result = -result;
        }
        result *= a[t][t];
        for (int i = t + 1; i < n; ++i) {
            if (a[i][t] == Rat(0)) continue;
            Rat f = a[i][t] / a[t][t];
            for (int c = t; c < n; ++c) a[i][c] -= f * a[t][c];
        }
    }
    if (result.denominator() != 1) throw std::logic_error("integer determinant expected");
    return result.numerator();
}

std::vector<Int> smith_invariants(const IntLattice &L)
{
    check_symmetric(L);
    return smith_with_right_transform(L.gram).first;
}

bool is_p_elementary(const IntLattice &L, const Int &p)
{
    for (const auto &d : smith_invariants(L))
        if (d != 0 && d != 1 && d != p) return false;
    return true;
}

Int pair(const IntLattice &L, const std::vector<Int> &v, const std::vector<Int> &w)
{
    int n = L.rank();
    if ((int)v.size() != n || (int)w.size() != n)
        throw std::invalid_argument("pair: dimension mismatch");
    Int acc = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) acc += v[i] * L.gram[i][j] * w[j];
    return acc;
}

IntLattice neg_e8()
{
    // Bourbaki E8: chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
    IntLattice L;
    L.gram.assign(8, std::vector<Int>(8, 0));
    for (int i = 0; i < 8; ++i) L.gram[i][i] = -2;
    const std::pair<int, int> edges[] = {{0, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
    for (auto [u, v] : edges) L.gram[u][v] = L.gram[v][u] = 1;
    return L;
}

} // namespace dlv::lattice
