#include "dlvar/rootcore.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dlv::rootcore {

CartanMatrix cartan_matrix(const std::string &type)
{
    auto chain = [](int n, int special_i = -1, int special_j = -1, long long special_val = -1) {
        // Standard simply-laced chain 1-2-...-n, with one entry overridden.
        IMat c(n, IVec(n, 0));
        for (int i = 0; i < n; ++i) {
            c[i][i] = 2;
            if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
        }
        if (special_i >= 0) c[special_i][special_j] = special_val;
        return c;
    };

    CartanMatrix cm;
    cm.label = type;
    if (type == "A1") {
        cm.n = 1;
        cm.c = {{2}};
    } else if (type == "A2" || type == "A3" || type == "A4") {
        cm.n = type[1] - '0';
        cm.c = chain(cm.n);
    } else if (type == "C2") {
        cm.n = 2;
        cm.c = {{2, -1}, {-2, 2}};
    } else if (type == "G2") {
        cm.n = 2;
        cm.c = {{2, -1}, {-3, 2}};
    } else if (type == "D4") {
        // Node 2 is the center: 1-2, 2-3, 2-4.
        cm.n = 4;
        cm.c = {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
    } else if (type == "F4") {
        cm.n = 4;
        cm.c = chain(4, 1, 2, -2); // C_23 = -2, C_32 = -1
    } else if (type.rfind("A1x", 0) == 0) {
        // "A1xA1", "A1xA1xA1", ...: products of A1 blocks.
        int d = 1;
        for (size_t pos = 0; (pos = type.find('x', pos)) != std::string::npos; ++pos) ++d;
        cm.n = d;
        cm.c = IMat(d, IVec(d, 0));
        for (int i = 0; i < d; ++i) cm.c[i][i] = 2;
    } else {
        throw std::invalid_argument("unknown Cartan type: " + type);
    }
    validate_cartan(cm);
    return cm;
}

void validate_cartan(const CartanMatrix &cm)
{
    int n = cm.n;
    if (n <= 0 || (int)cm.c.size() != n)
        throw std::invalid_argument("Cartan matrix: bad dimensions");
    for (int i = 0; i < n; ++i) {
        if ((int)cm.c[i].size() != n)
            throw std::invalid_argument("Cartan matrix: not square");
        if (cm.c[i][i] != 2)
            throw std::invalid_argument("Cartan matrix: diagonal entry != 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (cm.c[i][j] > 0)
                throw std::invalid_argument("Cartan matrix: positive off-diagonal entry");
            if ((cm.c[i][j] == 0) != (cm.c[j][i] == 0))
                throw std::invalid_argument("Cartan matrix: asymmetric zero pattern");
        }
    }
}

std::vector<int> RootSystem::positive_indices() const
{
    std::vector<int> idx;
    for (int i = 0; i < (int)roots.size(); ++i)
        if (positive[i]) idx.push_back(i);
    return idx;
}

int RootSystem::root_index(const IVec &root) const
{
    for (int i = 0; i < (int)roots.size(); ++i)
        if (roots[i] == root) return i;
    return -1;
}

namespace {

// Sign of a root/coroot coordinate vector: +1 all entries >= 0, -1 all <= 0.
int vec_sign(const IVec &v)
{
    bool has_pos = false, has_neg = false;
    for (auto x : v) {
        if (x > 0) has_pos = true;
        if (x < 0) has_neg = true;
    }
    if (has_pos && has_neg) throw std::logic_error("mixed-sign root vector");
    return has_neg ? -1 : 1;
}

} // namespace

RootSystem build_root_system(const CartanMatrix &cm)
{
    validate_cartan(cm);
    int n = cm.n;
    RootSystem rs;
    rs.cartan = cm;

    // Pairs (root coords, coroot coords); closure under the simple reflections.
    // On root coordinates:   s_i(beta)_j pairing <beta, alpha_i^vee> = sum_j beta_j C_{ji}.
    // On coroot coordinates: <alpha_i, beta^vee> = sum_j b_j C_{ij}.
    std::set<std::pair<IVec, IVec>> seen;
    std::vector<std::pair<IVec, IVec>> queue;
    for (int i = 0; i < n; ++i) {
        IVec e(n, 0);
        e[i] = 1;
        queue.push_back({e, e});
        seen.insert(queue.back());
    }
    for (size_t head = 0; head < queue.size(); ++head) {
        auto [root, coroot] = queue[head];
        for (int i = 0; i < n; ++i) {
            long long pr = 0, pc = 0;
            for (int j = 0; j < n; ++j) {
                pr += root[j] * cm.c[j][i];
                pc += coroot[j] * cm.c[i][j];
            }
            IVec r2 = root, c2 = coroot;
            r2[i] -= pr; // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
            c2[i] -= pc; // s_i(beta^vee) = beta^vee - <alpha_i, beta^vee> alpha_i^vee
            if (seen.insert({r2, c2}).second) queue.push_back({r2, c2});
        }
    }

    std::set<IVec> root_set;
    for (auto &[root, coroot] : seen) {
        rs.roots.push_back(root);
        rs.coroots.push_back(coroot);
        rs.positive.push_back(vec_sign(root) > 0);
        root_set.insert(root);
    }
    // Reducedness sanity: 2*alpha must not be a root.
    for (auto root : rs.roots) {
        for (auto &x : root) x *= 2;
        if (root_set.count(root)) throw std::logic_error("non-reduced root system");
    }
    return rs;
}

IMat identity_matrix(int n)
{
    IMat m(n, IVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat mat_mul(const IMat &a, const IMat &b)
{
    int n = (int)a.size();
    IMat r(n, IVec(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

IVec mat_apply(const IMat &m, const IVec &v)
{
    int n = (int)m.size();
    IVec r(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i] += m[i][j] * v[j];
    return r;
}

IMat generator_matrix(const RootSystem &rs, int i)
{
    int n = rs.rank();
    if (i < 1 || i > n) throw std::invalid_argument("generator index out of range");
    IMat m = identity_matrix(n);
    // column j = e_j - C_{ij} e_i
    for (int j = 0; j < n; ++j) m[i - 1][j] -= rs.cartan.c[i - 1][j];
    return m;
}

int weyl_length(const RootSystem &rs, const IMat &m)
{
    int count = 0;
    for (int idx : rs.positive_indices())
        if (vec_sign(mat_apply(m, rs.coroots[idx])) < 0) ++count;
    return count;
}

namespace {

// Lexicographically least reduced word via greedy left-descent choice.
std::vector<int> canonical_word(const RootSystem &rs, IMat m)
{
    std::vector<int> word;
    int len = weyl_length(rs, m);
    while (len > 0) {
        for (int i = 1; i <= rs.rank(); ++i) {
            IMat m2 = mat_mul(generator_matrix(rs, i), m);
            int len2 = weyl_length(rs, m2);
            if (len2 < len) {
                word.push_back(i);
                m = std::move(m2);
                len = len2;
                break;
            }
        }
    }
    return word;
}

} // namespace

WeylElement weyl_identity(const RootSystem &rs)
{
    return WeylElement{identity_matrix(rs.rank()), {}};
}

WeylElement weyl_from_matrix(const RootSystem &rs, const IMat &m)
{
    return WeylElement{m, canonical_word(rs, m)};
}

WeylElement weyl_from_word(const RootSystem &rs, const std::vector<int> &word)
{
    IMat m = identity_matrix(rs.rank());
    for (int i : word) m = mat_mul(m, generator_matrix(rs, i));
    return weyl_from_matrix(rs, m);
}

WeylElement weyl_mul(const RootSystem &rs, const WeylElement &a, const WeylElement &b)
{
    return weyl_from_matrix(rs, mat_mul(a.matrix, b.matrix));
}

std::vector<WeylElement> weyl_group(const RootSystem &rs)
{
    // BFS over right multiplication by generators.
    std::set<IMat> seen;
    std::vector<IMat> queue{identity_matrix(rs.rank())};
    seen.insert(queue[0]);
    for (size_t head = 0; head < queue.size(); ++head) {
        IMat m = queue[head];
        for (int i = 1; i <= rs.rank(); ++i) {
            IMat m2 = mat_mul(m, generator_matrix(rs, i));
            if (seen.insert(m2).second) queue.push_back(m2);
        }
    }
    std::vector<WeylElement> out;
    out.reserve(seen.size());
    for (auto &m : seen) out.push_back(weyl_from_matrix(rs, m));
    std::sort(out.begin(), out.end(), [](const WeylElement &a, const WeylElement &b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.word < b.word;
    });
    return out;
}

bool bruhat_leq(const RootSystem &rs, const WeylElement &v, const WeylElement &w)
{
    if ((int)v.matrix.size() != rs.rank() || (int)w.matrix.size() != rs.rank())
        throw std::invalid_argument("bruhat_leq: rank mismatch");
    if (v.length() > w.length()) return false;
    if (w.length() == 0) return v.length() == 0;
    // Standard recursion: with s the first letter of a reduced word of w,
    // v <= w iff (sv <= sw if l(sv) < l(v)) else (v <= sw).
    int s = w.word.front();
    IMat sm = generator_matrix(rs, s);
    WeylElement sw = weyl_from_matrix(rs, mat_mul(sm, w.matrix));
    IMat svm = mat_mul(sm, v.matrix);
    if (weyl_length(rs, svm) < v.length())
        return bruhat_leq(rs, weyl_from_matrix(rs, svm), sw);
    return bruhat_leq(rs, v, sw);
}

std::vector<std::vector<int>> reduced_words(const RootSystem &rs, const WeylElement &w)
{
    if (w.length() == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int i = 1; i <= rs.rank(); ++i) {
        IMat m2 = mat_mul(generator_matrix(rs, i), w.matrix);
        if (weyl_length(rs, m2) < w.length()) {
            for (auto tail : reduced_words(rs, weyl_from_matrix(rs, m2))) {
                tail.insert(tail.begin(), i);
                out.push_back(std::move(tail));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> support(const WeylElement &w)
{
    std::set<int> letters(w.word.begin(), w.word.end());
    return std::vector<int>(letters.begin(), letters.end());
}

} // namespace dlv::rootcore
