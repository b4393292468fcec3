#include "dlvar/dldatum.hpp"

#include "dlvar/rational.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dlv::dldatum {

namespace {

int perm_order(const std::vector<int> &perm)
{
    int n = (int)perm.size();
    std::vector<int> acc(n);
    std::iota(acc.begin(), acc.end(), 0);
    for (int ord = 1;; ++ord) {
        for (int i = 0; i < n; ++i) acc[i] = perm[acc[i]];
        bool ident = true;
        for (int i = 0; i < n; ++i)
            if (acc[i] != i) ident = false;
        if (ident) return ord;
        if (ord > n) throw std::logic_error("permutation order overflow");
    }
}

bool is_permutation(const std::vector<int> &perm, int n)
{
    if ((int)perm.size() != n) return false;
    std::vector<bool> hit(n, false);
    for (int v : perm) {
        if (v < 0 || v >= n || hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

DLDatum make_datum(const RootSystem &rs, long long p, std::vector<int> perm,
                   std::vector<int> exps, std::string key)
{
    DLDatum d;
    d.rs = rs;
    d.p = p;
    d.perm = std::move(perm);
    d.exps = std::move(exps);
    d.key = std::move(key);
    if (!validate_isogeny(rs, p, d.perm, d.exps))
        throw std::invalid_argument("invalid isogeny data for " + d.key);
    auto [r, s] = minimal_exponents(rs, p, d.perm, d.exps);
    d.r = r;
    d.s = s;
    return d;
}

} // namespace

IMat DLDatum::isogeny_matrix() const
{
    int n = rs.rank();
    IMat m(n, rootcore::IVec(n, 0));
    for (int i = 0; i < n; ++i) {
        long long q = 1;
        for (int e = 0; e < exps[i]; ++e) q *= p;
        m[perm[i]][i] = q;
    }
    return m;
}

bool validate_isogeny(const RootSystem &rs, long long p, const std::vector<int> &perm,
                      const std::vector<int> &exps)
{
    int n = rs.rank();
    if (p < 2 || !is_permutation(perm, n) || (int)exps.size() != n) return false;
    for (int e : exps)
        if (e < 0) return false;
    // p^{s_i} C_{d(j),d(i)} = p^{s_j} C_{j,i}; exact big-int powers.
    std::vector<Int> q(n);
    for (int i = 0; i < n; ++i) q[i] = int_pow(p, (unsigned)exps[i]);
    const auto &c = rs.cartan.c;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (q[i] * c[perm[j]][perm[i]] != q[j] * c[j][i]) return false;
    return true;
}

std::vector<DLDatum> enumerate_isogenies(const RootSystem &rs, long long p, int max_exp)
{
    if (max_exp > 4) throw std::invalid_argument("enumerate_isogenies: max_exp > 4");
    int n = rs.rank();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<DLDatum> out;
    do {
        if (perm_order(perm) > 3) continue;
        std::vector<int> exps(n, 0);
        for (;;) {
            if (validate_isogeny(rs, p, perm, exps))
                out.push_back(make_datum(rs, p, perm, exps, ""));
            // Odometer over exponent vectors.
            int pos = n - 1;
            while (pos >= 0 && exps[pos] == max_exp) exps[pos--] = 0;
            if (pos < 0) break;
            ++exps[pos];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end(), [](const DLDatum &a, const DLDatum &b) {
        if (a.perm != b.perm) return a.perm < b.perm;
        return a.exps < b.exps;
    });
    return out;
}

std::pair<int, int> minimal_exponents(const RootSystem &rs, long long p,
                                      const std::vector<int> &perm, const std::vector<int> &exps)
{
    int n = rs.rank();
    // Track phi_*^r as (permutation, exponent sums): column i of the power is
    // p^{sum} e_{d^r(i)}; scalar iff d^r = id and all sums equal.
    std::vector<int> cur_perm(n);
    std::iota(cur_perm.begin(), cur_perm.end(), 0);
    std::vector<int> cur_exp(n, 0);
    for (int r = 1; r <= 6; ++r) {
        for (int i = 0; i < n; ++i) {
            cur_exp[i] += exps[cur_perm[i]];
            cur_perm[i] = perm[cur_perm[i]];
        }
        bool scalar = true;
        for (int i = 0; i < n; ++i)
            if (cur_perm[i] != i || cur_exp[i] != cur_exp[0]) scalar = false;
        if (scalar) return {r, cur_exp[0]};
    }
    throw std::logic_error("minimal exponents not found for r <= 6");
}

bool is_frobenius_type(const DLDatum &d)
{
    for (int e : d.exps)
        if (e != d.exps[0]) return false;
    return true;
}

std::vector<WeylElement> phi_fixed_weyl(const DLDatum &d)
{
    IMat phi = d.isogeny_matrix();
    std::vector<WeylElement> out;
    for (auto &w : rootcore::weyl_group(d.rs))
        if (rootcore::mat_mul(phi, w.matrix) == rootcore::mat_mul(w.matrix, phi))
            out.push_back(w);
    return out;
}

std::vector<int> phi_support(const DLDatum &d, const WeylElement &w)
{
    std::set<int> supp; // 0-based while closing
    for (int letter : rootcore::support(w)) supp.insert(letter - 1);
    for (;;) {
        std::set<int> next = supp;
        for (int i : supp) next.insert(d.perm[i]);
        if (next == supp) break;
        supp = next;
    }
    std::vector<int> out;
    for (int i : supp) out.push_back(i + 1);
    return out;
}

bool is_phi_coxeter(const DLDatum &d, const WeylElement &w)
{
    auto supp = rootcore::support(w);
    if ((int)supp.size() != w.length()) return false; // repeated letters
    // d-orbits on simple indices (0-based).
    int n = d.rs.rank();
    std::vector<int> orbit(n, -1);
    int norbits = 0;
    for (int i = 0; i < n; ++i) {
        if (orbit[i] >= 0) continue;
        for (int j = i; orbit[j] < 0; j = d.perm[j]) orbit[j] = norbits;
        ++norbits;
    }
    std::vector<int> hits(norbits, 0);
    for (int letter : supp) ++hits[orbit[letter - 1]];
    for (int h : hits)
        if (h != 1) return false;
    return true;
}

bool catalog_key_fixes_prime(const std::string &key, long long &p_out)
{
    if (key == "2C2" || key == "2F4") {
        p_out = 2;
        return true;
    }
    if (key == "2G2") {
        p_out = 3;
        return true;
    }
    return false;
}

DLDatum catalog_datum(const std::string &key, long long p, int param)
{
    using rootcore::cartan_matrix;
    using rootcore::build_root_system;
    long long forced;
    if (catalog_key_fixes_prime(key, forced) && p != forced)
        throw std::invalid_argument("catalog key " + key + " requires p=" + std::to_string(forced));
    if (param < 0) throw std::invalid_argument("catalog parameter must be >= 0");

    auto untwisted = [&](const std::string &type) {
        auto rs = build_root_system(cartan_matrix(type));
        int n = rs.rank();
        std::vector<int> id(n);
        std::iota(id.begin(), id.end(), 0);
        return make_datum(rs, p, id, std::vector<int>(n, param), key);
    };

    if (key == "A1" || key == "A2" || key == "A3" || key == "A4" || key == "C2" ||
        key == "G2" || key == "D4" || key == "F4")
        return untwisted(key);

    if (key == "2A2")
        return make_datum(build_root_system(cartan_matrix("A2")), p, {1, 0},
                          {param, param}, key);
    if (key == "2A3")
        return make_datum(build_root_system(cartan_matrix("A3")), p, {2, 1, 0},
                          {param, param, param}, key);
    if (key == "2A4")
        return make_datum(build_root_system(cartan_matrix("A4")), p, {3, 2, 1, 0},
                          {param, param, param, param}, key);
    if (key == "3D4")
        // Triality 1 -> 3 -> 4 -> 1 fixing the central node 2.
        return make_datum(build_root_system(cartan_matrix("D4")), p, {2, 1, 3, 0},
                          {param, param, param, param}, key);
    if (key == "2C2")
        return make_datum(build_root_system(cartan_matrix("C2")), 2, {1, 0},
                          {param + 1, param}, key);
    if (key == "2G2")
        return make_datum(build_root_system(cartan_matrix("G2")), 3, {1, 0},
                          {param + 1, param}, key);
    if (key == "2F4")
        return make_datum(build_root_system(cartan_matrix("F4")), 2, {3, 2, 1, 0},
                          {param, param, param + 1, param + 1}, key);
    if (key.rfind("weil-", 0) == 0) {
        auto rs = build_root_system(cartan_matrix(key.substr(5)));
        int n = rs.rank();
        std::vector<int> shift(n);
        for (int i = 0; i < n; ++i) shift[i] = (i + 1) % n;
        return make_datum(rs, p, shift, std::vector<int>(n, param), key);
    }
    throw std::invalid_argument("unknown catalog key: " + key);
}

} // namespace dlv::dldatum
