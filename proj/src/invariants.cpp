#include "dlvar/invariants.hpp"

#include <stdexcept>

namespace dlv::invariants {

using rootcore::IMat;
using rootcore::IVec;

namespace {

// Solve the n x n rational system A x = b by Gaussian elimination.
std::vector<Rat> solve_rational(std::vector<std::vector<Rat>> a, std::vector<Rat> b)
{
    int n = (int)a.size();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (a[row][col] != Rat(0)) {
                piv = row;
                break;
            }
        if (piv < 0) throw std::runtime_error("singular operator in coefficient solve");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (int row = 0; row < n; ++row) {
            if (row == col || a[row][col] == Rat(0)) continue;
            Rat f = a[row][col] / a[col][col];
            for (int j = col; j < n; ++j) a[row][j] -= f * a[col][j];
            b[row] -= f * b[col];
        }
    }
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// mu solving phi^*(w^{-1} mu) - mu = m(rho - phi^*(rho)), in pairing
// coordinates x_i = <mu, alpha_i^vee>. With w(alpha_i^vee) expanded in simple
// coroots, (w^{-1}mu)_i = sum_j [w(alpha_i^vee)]_j x_j and
// (phi^* nu)_i = p^{s_i} nu_{d(i)}.
std::vector<Rat> solve_mu(const DLDatum &d, const IMat &wmat, const Int &m)
{
    int n = d.rs.rank();
    std::vector<Int> q(n);
    for (int i = 0; i < n; ++i) q[i] = int_pow(Int(d.p), (unsigned)d.exps[i]);

    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> b(n);
    for (int i = 0; i < n; ++i) {
        int di = d.perm[i];
        // Row i of phi^* w^{-1}: q_i * (coords of w(alpha_{d(i)}^vee)).
        IVec ei(n, 0);
        ei[di] = 1;
        IVec img = rootcore::mat_apply(wmat, ei);
        for (int j = 0; j < n; ++j) a[i][j] = Rat(q[i] * img[j]);
        a[i][i] -= Rat(1);
        b[i] = Rat(m) * (Rat(1) - Rat(q[i]));
    }
    return solve_rational(std::move(a), std::move(b));
}

} // namespace

CanonicalCoefficients canonical_coefficients(const DLDatum &d, const std::vector<int> &word)
{
    const auto &rs = d.rs;
    auto w = rootcore::weyl_from_word(rs, word);
    if (w.length() != (int)word.size())
        throw std::invalid_argument("canonical_coefficients: word is not reduced");

    CanonicalCoefficients out;
    out.word = word;
    out.mu = solve_mu(d, w.matrix, Int(1));

    // alpha~_j^vee = s_{i1}...s_{i_{j-1}}(alpha_{ij}^vee)
    IMat prefix = rootcore::identity_matrix(rs.rank());
    for (size_t j = 0; j < word.size(); ++j) {
        IVec e(rs.rank(), 0);
        e[word[j] - 1] = 1;
        IVec coroot = rootcore::mat_apply(prefix, e);
        out.twisted_coroots.push_back(coroot);
        Rat pairing(0);
        for (int k = 0; k < rs.rank(); ++k) pairing += Rat(coroot[k]) * out.mu[k];
        out.lambdas.push_back(pairing - Rat(1));
        prefix = rootcore::mat_mul(prefix, rootcore::generator_matrix(rs, word[j]));
    }

    // Sanity: every twisted coroot is a coroot of the system.
    for (const auto &cr : out.twisted_coroots) {
        bool found = false;
        for (const auto &known : rs.coroots)
            if (known == cr) found = true;
        if (!found) throw std::logic_error("twisted coroot not in the coroot system");
    }
    return out;
}

std::vector<Rat> canonical_coefficients_scaled(const DLDatum &d, const std::vector<int> &word,
                                               const Int &m)
{
    auto w = rootcore::weyl_from_word(d.rs, word);
    if (w.length() != (int)word.size())
        throw std::invalid_argument("canonical_coefficients_scaled: word is not reduced");
    auto mu = solve_mu(d, w.matrix, m);

    std::vector<Rat> lambdas;
    IMat prefix = rootcore::identity_matrix(d.rs.rank());
    for (size_t j = 0; j < word.size(); ++j) {
        IVec e(d.rs.rank(), 0);
        e[word[j] - 1] = 1;
        IVec coroot = rootcore::mat_apply(prefix, e);
        Rat pairing(0);
        for (int k = 0; k < d.rs.rank(); ++k) pairing += Rat(coroot[k]) * mu[k];
        lambdas.push_back((pairing - Rat(m)) / Rat(m));
        prefix = rootcore::mat_mul(prefix, rootcore::generator_matrix(d.rs, word[j]));
    }
    return lambdas;
}

ZeroDimCount zero_dim_count(const DLDatum &d)
{
    ZeroDimCount out;
    out.key = d.key;
    for (const auto &w : dldatum::phi_fixed_weyl(d)) {
        long long e = (long long)d.s * w.length();
        if (e % d.r != 0)
            throw std::runtime_error("zero_dim_count: r does not divide s*l(w)");
        Int term = int_pow(Int(d.p), (unsigned)(e / d.r));
        out.summands.push_back({w, term});
        out.total += term;
    }
    return out;
}

Int curve_genus(const DLDatum &d)
{
    auto cc = canonical_coefficients(d, {1});
    Int n = zero_dim_count(d).total;
    Rat two_g_minus_2 = cc.lambdas[0] * Rat(n);
    Rat g = (two_g_minus_2 + Rat(2)) / Rat(2);
    if (g.denominator() != 1 || g.numerator() < 0)
        throw std::runtime_error("curve_genus: 2g-2 = lambda_1*N gives non-integral or negative g");
    return g.numerator();
}

std::pair<long long, int> split_prime_power(long long q)
{
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    long long p = 2;
    while (q % p != 0) {
        ++p;
        if (p * p > q) {
            p = q;
            break;
        }
    }
    int s = 0;
    long long rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++s;
    }
    if (rest != 1) throw std::invalid_argument("q is not a prime power");
    return {p, s};
}

std::vector<TableRow> table_sweep(const std::string &key, long long p,
                                  const std::vector<int> &word, const std::vector<int> &params)
{
    std::vector<TableRow> rows;
    long long forced;
    bool suzuki_ree = dldatum::catalog_key_fixes_prime(key, forced);
    for (int param : params) {
        long long pp = suzuki_ree ? forced : p;
        DLDatum d = dldatum::catalog_datum(key, pp, param);
        auto cc = canonical_coefficients(d, word);
        TableRow row;
        // Displayed parameter: q = p^s for untwisted/Frobenius type, q0 = p^n
        // for the Suzuki-Ree keys.
        row.q = Rat(int_pow(Int(pp), (unsigned)param));
        row.lambda1 = cc.lambdas.size() > 0 ? cc.lambdas[0] : Rat(0);
        row.lambda2 = cc.lambdas.size() > 1 ? cc.lambdas[1] : Rat(0);
        rows.push_back(row);
    }
    return rows;
}

} // namespace dlv::invariants
