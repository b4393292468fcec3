#include "dlvar/quasiell.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dlv::quasiell {

// ---------------------------------------------------------------------------
// Univariate polynomial arithmetic over F_q.

int up_deg(const UPoly &f)
{
    return (int)f.size() - 1;
}

UPoly up_trim(UPoly f)
{
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

UPoly up_add(const FqField &F, const UPoly &a, const UPoly &b)
{
    UPoly c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        int x = i < a.size() ? a[i] : 0;
        int y = i < b.size() ? b[i] : 0;
        c[i] = F.add(x, y);
    }
    return up_trim(std::move(c));
}

UPoly up_mul(const FqField &F, const UPoly &a, const UPoly &b)
{
    if (a.empty() || b.empty()) return {};
    UPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    return up_trim(std::move(c));
}

std::pair<UPoly, UPoly> up_divmod(const FqField &F, UPoly a, const UPoly &b)
{
    if (b.empty()) throw std::invalid_argument("polynomial division by zero");
    a = up_trim(std::move(a));
    if (a.size() < b.size()) return {{}, a};
    UPoly q(a.size() - b.size() + 1, 0);
    int lead_inv = F.inv(b.back());
    for (int i = (int)a.size() - 1; i >= (int)b.size() - 1; --i) {
        int c = F.mul(a[i], lead_inv);
        if (c == 0) continue;
        q[i - (int)b.size() + 1] = c;
        for (size_t j = 0; j < b.size(); ++j) {
            size_t pos = i - (b.size() - 1) + j;
            a[pos] = F.sub(a[pos], F.mul(c, b[j]));
        }
    }
    return {up_trim(std::move(q)), up_trim(std::move(a))};
}

UPoly up_gcd(const FqField &F, UPoly a, UPoly b)
{
    a = up_trim(std::move(a));
    b = up_trim(std::move(b));
    while (!b.empty()) {
        UPoly r = up_divmod(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        int c = F.inv(a.back());
        for (int &x : a) x = F.mul(x, c);
    }
    return a;
}

UPoly up_derivative(const FqField &F, const UPoly &f)
{
    UPoly d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(F.mul(f[i], (int)(i % F.p())));
    return up_trim(std::move(d));
}

std::string up_to_string(const FqField &F, const UPoly &f, const std::string &var)
{
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = (int)f.size() - 1; i >= 0; --i) {
        if (f[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || f[i] != 1) os << f[i];
        if (i > 0) {
            if (f[i] != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

UPoly up_mulmod(const FqField &F, const UPoly &a, const UPoly &b, const UPoly &m)
{
    return up_divmod(F, up_mul(F, a, b), m).second;
}

UPoly up_powmod(const FqField &F, UPoly base, long long e, const UPoly &m)
{
    UPoly out{1};
    base = up_divmod(F, std::move(base), m).second;
    while (e > 0) {
        if (e & 1) out = up_mulmod(F, out, base, m);
        base = up_mulmod(F, base, base, m);
        e >>= 1;
    }
    return out;
}

// p-th root of a polynomial with vanishing derivative (exponents divisible
// by p; the coefficient field is perfect).
UPoly up_proot(const FqField &F, const UPoly &f)
{
    int p = F.p();
    UPoly g((f.size() + p - 1) / p, 0);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        if (i % p != 0) throw std::logic_error("up_proot: exponent not divisible by p");
        // c -> c^{q/p} inverts the Frobenius on F_q.
        g[i / p] = F.pow(f[i], F.q() / p);
    }
    return up_trim(std::move(g));
}

void edf_split(const FqField &F, const UPoly &g, int d, std::mt19937 &rng,
               std::vector<UPoly> &out)
{
    if (up_deg(g) == d) {
        out.push_back(g);
        return;
    }
    // Cantor-Zassenhaus in characteristic 2: split with the F2-trace map
    // T(r) = r + r^2 + ... + r^{2^{md-1}} of a random element mod g.
    int m_bits = 0;
    for (int q = F.q(); q > 1; q /= F.p()) ++m_bits;
    std::uniform_int_distribution<int> coef(0, F.q() - 1);
    while (true) {
        UPoly r(up_deg(g), 0);
        for (int &c : r) c = coef(rng);
        r = up_trim(std::move(r));
        if (r.empty()) continue;
        UPoly acc = r, pw = r;
        for (int i = 1; i < m_bits * d; ++i) {
            pw = up_mulmod(F, pw, pw, g);
            acc = up_add(F, acc, pw);
        }
        UPoly h = up_gcd(F, g, acc);
        if (!h.empty() && up_deg(h) > 0 && up_deg(h) < up_deg(g)) {
            edf_split(F, h, d, rng, out);
            edf_split(F, up_divmod(F, g, h).first, d, rng, out);
            return;
        }
    }
}

// Irreducible factors of a monic squarefree polynomial.
std::vector<UPoly> factor_squarefree(const FqField &F, UPoly s, std::mt19937 &rng)
{
    std::vector<UPoly> out;
    UPoly x{0, 1};
    UPoly h = x;
    for (int d = 1; 2 * d <= up_deg(s); ++d) {
        h = up_powmod(F, h, F.q(), s);
        UPoly g = up_gcd(F, s, up_add(F, h, x));
        if (up_deg(g) > 0) {
            edf_split(F, g, d, rng, out);
            s = up_divmod(F, s, g).first;
            h = up_divmod(F, h, s).second;
        }
    }
    if (up_deg(s) > 0) out.push_back(s);
    return out;
}

} // namespace

std::vector<std::pair<UPoly, int>> up_factor(const FqField &F, UPoly f)
{
    f = up_trim(std::move(f));
    if (f.empty()) throw std::invalid_argument("up_factor: zero polynomial");
    int lead = F.inv(f.back());
    for (int &c : f) c = F.mul(c, lead);

    std::mt19937 rng(0x5eedu);
    std::map<UPoly, int> found;
    std::vector<std::pair<UPoly, int>> stack{{f, 1}};
    while (!stack.empty()) {
        auto [g, weight] = stack.back();
        stack.pop_back();
        if (up_deg(g) <= 0) continue;
        UPoly dg = up_derivative(F, g);
        if (dg.empty()) {
            // g is a p-th power.
            stack.push_back({up_proot(F, g), weight * F.p()});
            continue;
        }
        UPoly s = up_divmod(F, g, up_gcd(F, g, dg)).first; // squarefree part
        for (const UPoly &q : factor_squarefree(F, s, rng)) {
            int e = 0;
            while (true) {
                auto [quot, rem] = up_divmod(F, g, q);
                if (!rem.empty()) break;
                g = std::move(quot);
                ++e;
            }
            found[q] += weight * e;
        }
        stack.push_back({g, weight}); // leftover: multiplicities divisible by p
    }

    std::vector<std::pair<UPoly, int>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Coefficient field elements.

CoefField CoefField::parse(const std::string &spec)
{
    std::string s = spec;
    CoefField k;
    if (s.size() >= 3 && s.substr(s.size() - 3) == "(u)") {
        k.has_u = true;
        s = s.substr(0, s.size() - 3);
    }
    static const std::map<std::string, int> sizes = {{"F2", 1}, {"F4", 2}, {"F8", 3}, {"F16", 4}};
    auto it = sizes.find(s);
    if (it == sizes.end()) throw std::invalid_argument("unknown coefficient field: " + spec);
    k.base = &FqField::get(2, it->second);
    return k;
}

namespace {

KElem k_make(const CoefField &k, UPoly num, UPoly den)
{
    const FqField &F = *k.base;
    num = up_trim(std::move(num));
    den = up_trim(std::move(den));
    if (den.empty()) throw std::invalid_argument("division by zero in coefficient field");
    if (num.empty()) return KElem{{}, {1}};
    UPoly g = up_gcd(F, num, den);
    if (up_deg(g) > 0) {
        num = up_divmod(F, num, g).first;
        den = up_divmod(F, den, g).first;
    }
    int c = F.inv(den.back());
    for (int &x : num) x = F.mul(x, c);
    for (int &x : den) x = F.mul(x, c);
    if (!k.has_u && (up_deg(num) > 0 || up_deg(den) > 0))
        throw std::invalid_argument("transcendental element over a finite coefficient field");
    return KElem{std::move(num), std::move(den)};
}

} // namespace

KElem k_zero()
{
    return KElem{{}, {1}};
}

KElem k_const(int c)
{
    if (c == 0) return k_zero();
    return KElem{{c}, {1}};
}

KElem k_int(int c)
{
    return k_const(c);
}

KElem k_u(const CoefField &k)
{
    if (!k.has_u) throw std::invalid_argument("u is not an element of a finite field");
    return KElem{{0, 1}, {1}};
}

bool k_is_zero(const KElem &x)
{
    return x.num.empty();
}

KElem k_add(const CoefField &k, const KElem &a, const KElem &b)
{
    const FqField &F = *k.base;
    UPoly num = up_add(F, up_mul(F, a.num, b.den), up_mul(F, b.num, a.den));
    return k_make(k, std::move(num), up_mul(F, a.den, b.den));
}

KElem k_mul(const CoefField &k, const KElem &a, const KElem &b)
{
    const FqField &F = *k.base;
    return k_make(k, up_mul(F, a.num, b.num), up_mul(F, a.den, b.den));
}

KElem k_inv(const CoefField &k, const KElem &a)
{
    if (k_is_zero(a)) throw std::invalid_argument("inverse of zero");
    return k_make(k, a.den, a.num);
}

KElem k_div(const CoefField &k, const KElem &a, const KElem &b)
{
    return k_mul(k, a, k_inv(k, b));
}

KElem k_pow(const CoefField &k, KElem a, int e)
{
    if (e < 0) {
        a = k_inv(k, a);
        e = -e;
    }
    KElem out = k_const(1);
    while (e > 0) {
        if (e & 1) out = k_mul(k, out, a);
        a = k_mul(k, a, a);
        e >>= 1;
    }
    return out;
}

namespace {

// Over a perfect field of characteristic 2 a polynomial is a square iff all
// its exponents are even.
bool up_is_square(const UPoly &f)
{
    for (size_t i = 1; i < f.size(); i += 2)
        if (f[i] != 0) return false;
    return true;
}

UPoly up_sqrt(const FqField &F, const UPoly &f)
{
    UPoly g((f.size() + 1) / 2, 0);
    for (size_t i = 0; i < f.size(); i += 2) g[i / 2] = F.sqrt2(f[i]);
    return up_trim(std::move(g));
}

} // namespace

bool k_is_square(const CoefField &k, const KElem &x)
{
    if (!k.has_u) return true; // finite fields of characteristic 2 are perfect
    return up_is_square(x.num) && up_is_square(x.den);
}

KElem k_sqrt(const CoefField &k, const KElem &x)
{
    if (!k_is_square(k, x)) throw std::invalid_argument("k_sqrt: not a square");
    const FqField &F = *k.base;
    if (!k.has_u) {
        int v = x.num.empty() ? 0 : x.num[0];
        return k_const(F.sqrt2(v));
    }
    return k_make(k, up_sqrt(F, x.num), up_sqrt(F, x.den));
}

std::string k_to_string(const CoefField &k, const KElem &x)
{
    const FqField &F = *k.base;
    std::string num = up_to_string(F, x.num, "u");
    if (up_deg(x.den) <= 0) return num;
    return "(" + num + ")/(" + up_to_string(F, x.den, "u") + ")";
}

bool artin_schreier_split(const CoefField &k, const KElem &c)
{
    const FqField &F = *k.base;
    if (!k.has_u) {
        int v = c.num.empty() ? 0 : c.num[0];
        for (int y = 0; y < F.q(); ++y)
            if (F.add(F.mul(y, y), y) == v) return true;
        return false;
    }
    // A root a/b in lowest terms of T^2 + T + f/g forces b^2 = g, so the
    // reduced denominator must be a square; then solve y^2 + y h = f for a
    // polynomial y, an F2-linear system on the base-field coefficient bits.
    if (!up_is_square(c.den)) return false;
    UPoly h = up_sqrt(F, c.den);
    const UPoly &f = c.num;
    int m = F.k();
    int bound = std::max(up_deg(h), up_deg(f) / 2 + 1) + 1; // deg y <= bound
    int nvars = m * (bound + 1);
    int max_coeff = std::max(2 * bound, bound + up_deg(h));
    int nrows = m * (max_coeff + 1);
    std::vector<std::vector<int>> rows(nrows, std::vector<int>(nvars + 1, 0));
    for (int j = 0; j <= bound; ++j)
        for (int bit = 0; bit < m; ++bit) {
            int var = j * m + bit;
            int e = 1 << bit; // basis element of F_{2^m}
            // y_j^2 lands in coefficient 2j; squaring is F2-linear.
            int sq = F.mul(e, e);
            for (int b2 = 0; b2 < m; ++b2)
                if ((sq >> b2) & 1) rows[2 * j * m + b2][var] ^= 1;
            // y_j * h_l lands in coefficient j + l.
            for (int l = 0; l <= up_deg(h); ++l) {
                int prod = F.mul(e, h[l]);
                for (int b2 = 0; b2 < m; ++b2)
                    if ((prod >> b2) & 1) rows[(j + l) * m + b2][var] ^= 1;
            }
        }
    for (int i = 0; i <= up_deg(f); ++i)
        for (int b2 = 0; b2 < m; ++b2)
            if ((f[i] >> b2) & 1) rows[i * m + b2][nvars] = 1;

    // Gaussian elimination over F2; solvable iff no row reduces to 0 = 1.
    int rank = 0;
    for (int col = 0; col < nvars && rank < nrows; ++col) {
        int pivot = -1;
        for (int r = rank; r < nrows; ++r)
            if (rows[r][col]) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < nrows; ++r)
            if (r != rank && rows[r][col])
                for (int cc = col; cc <= nvars; ++cc) rows[r][cc] ^= rows[rank][cc];
        ++rank;
    }
    for (const auto &row : rows) {
        bool all_zero = true;
        for (int cc = 0; cc < nvars; ++cc)
            if (row[cc]) {
                all_zero = false;
                break;
            }
        if (all_zero && row[nvars]) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Polynomials in t.

int tp_deg(const TPoly &f)
{
    return (int)f.size() - 1;
}

TPoly tp_trim(TPoly f)
{
    while (!f.empty() && k_is_zero(f.back())) f.pop_back();
    return f;
}

TPoly tp_add(const CoefField &k, const TPoly &a, const TPoly &b)
{
    TPoly c(std::max(a.size(), b.size()), k_zero());
    for (size_t i = 0; i < c.size(); ++i) {
        KElem x = i < a.size() ? a[i] : k_zero();
        KElem y = i < b.size() ? b[i] : k_zero();
        c[i] = k_add(k, x, y);
    }
    return tp_trim(std::move(c));
}

TPoly tp_mul(const CoefField &k, const TPoly &a, const TPoly &b)
{
    if (a.empty() || b.empty()) return {};
    TPoly c(a.size() + b.size() - 1, k_zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = k_add(k, c[i + j], k_mul(k, a[i], b[j]));
    return tp_trim(std::move(c));
}

TPoly tp_scale(const CoefField &k, const KElem &c, const TPoly &f)
{
    TPoly out = f;
    for (KElem &x : out) x = k_mul(k, c, x);
    return tp_trim(std::move(out));
}

TPoly tp_derivative(const CoefField &k, const TPoly &f)
{
    TPoly d;
    for (size_t i = 1; i < f.size(); ++i)
        d.push_back(i % 2 == 1 ? f[i] : k_zero());
    return tp_trim(std::move(d));
}

bool tp_eq(const TPoly &a, const TPoly &b)
{
    return tp_trim(a) == tp_trim(b);
}

TPoly parse_tpoly(const CoefField &k, const std::string &text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) s += c;
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    TPoly out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find('+', pos);
        std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? s.size() : next + 1;
        if (term.empty()) throw std::invalid_argument("malformed polynomial: " + text);
        KElem coef = k_const(1);
        int tdeg = 0;
        size_t fpos = 0;
        while (fpos < term.size()) {
            size_t fnext = term.find('*', fpos);
            std::string factor =
                term.substr(fpos, fnext == std::string::npos ? fnext : fnext - fpos);
            fpos = fnext == std::string::npos ? term.size() : fnext + 1;
            if (factor.empty()) throw std::invalid_argument("malformed polynomial: " + text);
            int exp = 1;
            size_t caret = factor.find('^');
            std::string head = factor;
            if (caret != std::string::npos) {
                head = factor.substr(0, caret);
                std::string etext = factor.substr(caret + 1);
                if (etext.empty() ||
                    !std::all_of(etext.begin(), etext.end(),
                                 [](char c) { return std::isdigit((unsigned char)c); }))
                    throw std::invalid_argument("malformed exponent: " + factor);
                exp = std::stoi(etext);
            }
            if (head == "t") {
                tdeg += exp;
            } else if (head == "u") {
                coef = k_mul(k, coef, k_pow(k, k_u(k), exp));
            } else if (!head.empty() &&
                       std::all_of(head.begin(), head.end(),
                                   [](char c) { return std::isdigit((unsigned char)c); })) {
                int v = std::stoi(head);
                if (v >= k.base->q())
                    throw std::invalid_argument("coefficient out of range: " + head);
                coef = k_mul(k, coef, k_pow(k, k_const(v), exp));
            } else {
                throw std::invalid_argument("malformed polynomial: " + text);
            }
        }
        if ((int)out.size() <= tdeg) out.resize(tdeg + 1, k_zero());
        out[tdeg] = k_add(k, out[tdeg], coef);
    }
    return tp_trim(std::move(out));
}

std::string tpoly_to_string(const CoefField &k, const TPoly &f)
{
    TPoly g = tp_trim(f);
    if (g.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = (int)g.size() - 1; i >= 0; --i) {
        if (k_is_zero(g[i])) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = k_to_string(k, g[i]);
        bool is_one = g[i] == k_const(1);
        if (i == 0 || !is_one) {
            if (cs.find(' ') != std::string::npos && cs[0] != '(') cs = "(" + cs + ")";
            os << cs;
        }
        if (i > 0) {
            if (!is_one) os << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Quasi-discriminant and coordinate changes.

QuasiDisc quasi_discriminant(const ShortWeierstrass &w)
{
    const CoefField &k = w.k;
    TPoly da4 = tp_derivative(k, w.a4);
    TPoly da6 = tp_derivative(k, w.a6);
    QuasiDisc out;
    out.psi = tp_add(k, tp_mul(k, w.a4, tp_mul(k, da4, da4)), tp_mul(k, da6, da6));
    out.is_zero = out.psi.empty();
    out.val_inf = (12LL * w.d - 4) - (out.is_zero ? 0 : tp_deg(out.psi));
    if (out.is_zero) return out;

    const FqField &F = *k.base;
    if (!k.has_u) {
        UPoly psi(out.psi.size());
        for (size_t i = 0; i < out.psi.size(); ++i)
            psi[i] = out.psi[i].num.empty() ? 0 : out.psi[i].num[0];
        for (const auto &[g, e] : up_factor(F, psi))
            out.finite.push_back({up_to_string(F, g, "t"), up_deg(g), e});
    } else {
        // Over F_{2^m}(u) report the rational places t and t+1 only.
        int v0 = 0;
        while (v0 < (int)out.psi.size() && k_is_zero(out.psi[v0])) ++v0;
        int v1 = 0;
        TPoly cur = out.psi;
        while (true) {
            // Synthetic division by t + 1: remainder is the value at t = 1.
            KElem value = k_zero();
            for (const KElem &c : cur) value = k_add(k, value, c);
            if (!k_is_zero(value) || cur.empty()) break;
            TPoly quot(cur.size() - 1, k_zero());
            KElem carry = k_zero();
            for (int i = (int)cur.size() - 1; i >= 1; --i) {
                carry = k_add(k, cur[i], carry);
                quot[i - 1] = carry;
            }
            cur = tp_trim(std::move(quot));
            ++v1;
        }
        out.finite.push_back({"t", 1, v0});
        out.finite.push_back({"t + 1", 1, v1});
    }
    return out;
}

ShortWeierstrass transform(const ShortWeierstrass &w, const KElem &u, const TPoly &s,
                           const TPoly &tau)
{
    const CoefField &k = w.k;
    if (k_is_zero(u)) throw std::invalid_argument("transform: u must be invertible");
    TPoly s2 = tp_mul(k, s, s);
    TPoly s4 = tp_mul(k, s2, s2);
    KElem ui4 = k_pow(k, u, -4);
    KElem ui6 = k_pow(k, u, -6);
    ShortWeierstrass out;
    out.k = k;
    out.d = w.d;
    out.a4 = tp_scale(k, ui4, tp_add(k, w.a4, s4));
    TPoly a6 = tp_add(k, w.a6, tp_mul(k, tau, tau));
    a6 = tp_add(k, a6, tp_mul(k, s2, tp_add(k, s4, w.a4)));
    out.a6 = tp_scale(k, ui6, a6);
    if (tp_deg(out.a4) > 4 * out.d || tp_deg(out.a6) > 6 * out.d)
        throw std::invalid_argument("transform: degree bound exceeded");
    return out;
}

// ---------------------------------------------------------------------------
// Normal form and classifiers.

std::variant<NormalForm, std::string> normal_form_reduce(const ShortWeierstrass &w)
{
    const CoefField &k = w.k;
    if (k.has_u)
        throw std::invalid_argument("normal_form_reduce: needs a perfect coefficient field");
    if (w.d != 2) throw std::invalid_argument("normal_form_reduce: needs d = 2");
    const FqField &F = *k.base;

    QuasiDisc qd = quasi_discriminant(w);
    if (qd.is_zero) return std::string("Psi = 0");
    auto val_at = [&](const std::string &place) {
        for (const auto &pv : qd.finite)
            if (pv.place == place) return pv.val;
        return 0;
    };
    int v0 = val_at("t"), v1 = val_at("t + 1");
    if (v0 < 8) return "val_0(Psi) = " + std::to_string(v0) + " < 8";
    if (qd.val_inf < 8) return "val_inf(Psi) = " + std::to_string(qd.val_inf) + " < 8";
    if (v1 < 4) return "val_1(Psi) = " + std::to_string(v1) + " < 4";

    auto coeff = [&](const TPoly &f, int i) {
        if (i >= (int)f.size() || k_is_zero(f[i])) return 0;
        return f[i].num[0];
    };

    // Kill a4 in degrees 0, 4, 8 with fourth roots of the coefficients.
    TPoly s(3, k_zero());
    for (int i = 0; i <= 2; ++i) s[i] = k_const(F.sqrt2(F.sqrt2(coeff(w.a4, 4 * i))));
    ShortWeierstrass w1 = transform(w, k_const(1), s, {});

    // Kill a6 in even degrees with square roots.
    TPoly tau(7, k_zero());
    for (int j = 0; j <= 6; ++j) tau[j] = k_const(F.sqrt2(coeff(w1.a6, 2 * j)));
    ShortWeierstrass w2 = transform(w1, k_const(1), {}, tau);

    for (int i = 0; i <= tp_deg(w2.a4); ++i)
        if (i != 2 && i != 6 && coeff(w2.a4, i) != 0)
            return "a4 has a stray term of degree " + std::to_string(i);
    for (int j = 0; j <= tp_deg(w2.a6); ++j)
        if (j != 5 && j != 7 && coeff(w2.a6, j) != 0)
            return "a6 has a stray term of degree " + std::to_string(j);
    int mu5 = coeff(w2.a6, 5), mu7 = coeff(w2.a6, 7);
    if (mu5 != mu7) return std::string("a6 is not proportional to t^5 + t^7");
    if (mu5 == 0) return std::string("mu = 0");
    return NormalForm{k_const(coeff(w2.a4, 2)), k_const(coeff(w2.a4, 6)), k_const(mu5)};
}

std::string rdp_name(RDPType t)
{
    switch (t) {
    case RDPType::Regular: return "Regular";
    case RDPType::A1: return "A1";
    case RDPType::C3: return "C3";
    case RDPType::C5: return "C5";
    case RDPType::C7: return "C7";
    case RDPType::D4: return "D4";
    case RDPType::D8: return "D8";
    case RDPType::E8: return "E8";
    case RDPType::G2rdp: return "G2";
    case RDPType::Undecidable: return "Undecidable";
    }
    return "?";
}

namespace {

enum class CubicKind { Irreducible, SemiSplit, Split, Unknown };

// T^2 + B T + C: split (into linear factors) or not.
bool quadratic_splits(const CoefField &k, const KElem &b, const KElem &c)
{
    if (k_is_zero(b)) return k_is_square(k, c);
    return artin_schreier_split(k, k_div(k, c, k_mul(k, b, b)));
}

CubicKind classify_with_root(const CoefField &k, const KElem &e, const KElem &root)
{
    // T^3 + eT + mu = (T + root)(T^2 + root T + (e + root^2)).
    KElem c = k_add(k, e, k_mul(k, root, root));
    return quadratic_splits(k, root, c) ? CubicKind::Split : CubicKind::SemiSplit;
}

// All monic divisors of a polynomial, from its factorization; empty optional
// on guardrail overflow.
bool monic_divisors(const FqField &F, const UPoly &f, std::vector<UPoly> &out, size_t cap)
{
    out = {{1}};
    if (up_deg(up_trim(f)) <= 0) return true;
    for (const auto &[g, e] : up_factor(F, f)) {
        std::vector<UPoly> next;
        UPoly pw{1};
        for (int i = 0; i <= e; ++i) {
            for (const UPoly &d : out) next.push_back(up_mul(F, d, pw));
            if (i < e) pw = up_mul(F, pw, g);
        }
        out = std::move(next);
        if (out.size() > cap) return false;
    }
    return true;
}

// Factorization shape of T^3 + eT + mu over the coefficient field.
CubicKind cubic_kind(const CoefField &k, const KElem &e, const KElem &mu)
{
    const FqField &F = *k.base;
    if (!k.has_u) {
        for (int y = 0; y < F.q(); ++y) {
            KElem root = k_const(y);
            KElem val = k_add(k, k_add(k, k_pow(k, root, 3), k_mul(k, e, root)), mu);
            if (k_is_zero(val)) return classify_with_root(k, e, root);
        }
        return CubicKind::Irreducible;
    }
    // Rational-root search over F_{2^m}(u): clear denominators to
    // A3 T^3 + A1 T + A0 with polynomial coefficients; a reduced root a/b
    // needs b | A3 and a | A0 up to units, so enumerate monic divisors.
    UPoly d = up_mul(F, e.den, mu.den);
    UPoly a3 = d;
    UPoly a1 = up_mul(F, e.num, mu.den);
    UPoly a0 = up_mul(F, mu.num, e.den);
    const size_t cap = 20000;
    std::vector<UPoly> dens, nums;
    if (!monic_divisors(F, a3, dens, cap) || !monic_divisors(F, a0, nums, cap))
        return CubicKind::Unknown;
    if (dens.size() * nums.size() * (F.q() - 1) > cap) return CubicKind::Unknown;
    for (const UPoly &b : dens)
        for (const UPoly &a : nums)
            for (int unit = 1; unit < F.q(); ++unit) {
                UPoly num = a;
                for (int &c : num) c = F.mul(c, unit);
                KElem root = k_make(k, num, b);
                KElem val = k_add(k, k_add(k, k_pow(k, root, 3), k_mul(k, e, root)), mu);
                if (k_is_zero(val)) return classify_with_root(k, e, root);
            }
    return CubicKind::Irreducible; // the rational-root search is complete
}

} // namespace

RDPType rdp_at_one(const CoefField &k, const KElem &l2, const KElem &l6, const KElem &mu)
{
    if (k_is_zero(mu)) throw std::invalid_argument("rdp_at_one: mu must be nonzero");
    KElem e = k_add(k, l2, l6);
    if (!k_is_square(k, e)) return RDPType::Regular;
    KElem e32 = k_mul(k, e, k_sqrt(k, e));
    if (!k_is_square(k, k_add(k, mu, e32))) return RDPType::A1;
    switch (cubic_kind(k, e, mu)) {
    case CubicKind::Irreducible: return RDPType::G2rdp;
    case CubicKind::SemiSplit: return RDPType::C3;
    case CubicKind::Split: return RDPType::D4;
    case CubicKind::Unknown: return RDPType::Undecidable;
    }
    return RDPType::Undecidable;
}

RDPType rdp_at_zero(const CoefField &k, const KElem &l2_in, const KElem &l6_in,
                    const KElem &mu, bool swap)
{
    if (k_is_zero(mu)) throw std::invalid_argument("rdp_at_zero: mu must be nonzero");
    KElem l2 = swap ? l6_in : l2_in;
    KElem l6 = swap ? l2_in : l6_in;
    if (k_is_zero(l2)) return RDPType::E8;
    if (!k_is_square(k, l2)) return RDPType::C3;
    KElem r = k_sqrt(k, l2);
    KElem l2_52 = k_mul(k, k_mul(k, l2, l2), r); // l2^{5/2}
    if (!k_is_square(k, k_div(k, mu, l2_52))) return RDPType::C5;
    KElem l2_3 = k_pow(k, l2, 3);
    KElem c = k_add(k, k_div(k, l6, l2_3), k_div(k, mu, k_mul(k, l2_3, r)));
    return artin_schreier_split(k, c) ? RDPType::D8 : RDPType::C7;
}

std::array<RDPType, 3> classify_k3_family(const CoefField &k, int alpha)
{
    if (k.has_u) throw std::invalid_argument("classify_k3_family: finite base only");
    if (alpha <= 0 || alpha >= k.base->q())
        throw std::invalid_argument("classify_k3_family: alpha must be a nonzero element");
    const FqField &F = *k.base;
    KElem mu = k_const(F.mul(F.mul(alpha, alpha), alpha));
    KElem z = k_zero();
    return {rdp_at_zero(k, z, z, mu, false), rdp_at_one(k, z, z, mu),
            rdp_at_zero(k, z, z, mu, true)};
}

// ---------------------------------------------------------------------------
// Elliptic census over F2.

namespace {

using LongForm = std::array<int, 5>; // a1, a2, a3, a4, a6 over F2

int f2(int x)
{
    return x & 1;
}

bool is_nonsingular(const LongForm &c)
{
    auto [a1, a2, a3, a4, a6] = c;
    int b2 = f2(a1 * a1);
    int b4 = f2(a1 * a3);
    int b6 = f2(a3 * a3);
    int b8 = f2(a1 * a1 * a6 + a1 * a3 * a4 + a2 * a3 * a3 + a4 * a4);
    int disc = f2(b2 * b2 * b8 + b6 * b6 + b2 * b4 * b6);
    return disc != 0;
}

LongForm apply_rst(const LongForm &c, int r, int s, int t)
{
    auto [a1, a2, a3, a4, a6] = c;
    LongForm out;
    out[0] = a1;
    out[1] = f2(a2 + s * a1 + r + s * s);
    out[2] = f2(a3 + r * a1);
    out[3] = f2(a4 + s * a3 + (t + r * s) * a1 + r * r);
    out[4] = f2(a6 + r * a4 + r * r * a2 + r * r * r + t * a3 + t * t + r * t * a1);
    return out;
}

int f2_points(const LongForm &c)
{
    auto [a1, a2, a3, a4, a6] = c;
    int count = 1; // the point at infinity
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            if (f2(y * y + a1 * x * y + a3 * y + x * x * x + a2 * x * x + a4 * x + a6) == 0)
                ++count;
    return count;
}

} // namespace

std::vector<EllipticClass> elliptic_census_f2()
{
    std::vector<LongForm> all;
    for (int bits = 0; bits < 32; ++bits) {
        LongForm c;
        for (int i = 0; i < 5; ++i) c[i] = (bits >> i) & 1;
        if (is_nonsingular(c)) all.push_back(c);
    }
    std::set<LongForm> seen;
    std::vector<EllipticClass> out;
    for (const LongForm &start : all) {
        if (seen.count(start)) continue;
        std::set<LongForm> orbit;
        std::vector<LongForm> queue{start};
        while (!queue.empty()) {
            LongForm c = queue.back();
            queue.pop_back();
            if (orbit.count(c)) continue;
            orbit.insert(c);
            for (int r = 0; r < 2; ++r)
                for (int s = 0; s < 2; ++s)
                    for (int t = 0; t < 2; ++t) queue.push_back(apply_rst(c, r, s, t));
        }
        LongForm rep = *orbit.begin();
        int aut = 0;
        for (int r = 0; r < 2; ++r)
            for (int s = 0; s < 2; ++s)
                for (int t = 0; t < 2; ++t)
                    if (apply_rst(rep, r, s, t) == rep) ++aut;
        EllipticClass cls;
        cls.rep = rep;
        cls.point_count = f2_points(rep);
        cls.aut_order = aut;
        cls.orbit_size = (int)orbit.size();
        out.push_back(cls);
        seen.insert(orbit.begin(), orbit.end());
    }
    std::sort(out.begin(), out.end(),
              [](const EllipticClass &a, const EllipticClass &b) {
                  return a.point_count < b.point_count;
              });
    return out;
}

ResidualDivisorReport residual_divisor_points()
{
    // The five-point curve y^2 + y = x^3 + x, so a4 = 1, a6 = 0.
    const int a4 = 1, a6 = 0;
    ResidualDivisorReport rep;

    // D: x^2 + x = 0, y^2 + y = (a4+1)x + a6, counted over F2.
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            if (f2(x * x + x) == 0 && f2(y * y + y + (a4 + 1) * x + a6) == 0)
                ++rep.d_rational_points;

    // D': x^2 + x + 1 = 0, y^2 + y = a4 x + (a6+1), solved over F16 and
    // grouped into Frobenius orbits to read off the closed-point degrees.
    const FqField &F = FqField::get(2, 4);
    std::set<std::pair<int, int>> solutions;
    for (int x = 0; x < 16; ++x)
        for (int y = 0; y < 16; ++y) {
            int lhs = F.add(F.add(F.mul(x, x), x), 1);
            int rhs = F.add(F.add(F.mul(y, y), y), F.add(F.mul(a4, x), F.add(a6, 1)));
            if (lhs == 0 && rhs == 0) solutions.insert({x, y});
        }
    std::set<std::pair<int, int>> used;
    for (const auto &pt : solutions) {
        if (used.count(pt)) continue;
        int deg = 0;
        auto cur = pt;
        do {
            used.insert(cur);
            cur = {F.mul(cur.first, cur.first), F.mul(cur.second, cur.second)};
            ++deg;
        } while (cur != pt);
        rep.dprime_place_degrees.push_back(deg);
    }
    std::sort(rep.dprime_place_degrees.begin(), rep.dprime_place_degrees.end());

    // Both divisors live in the affine chart (the origin is the point at
    // infinity) and their x-coordinates satisfy incompatible equations.
    bool overlap = false;
    for (const auto &pt : solutions)
        if (F.add(F.mul(pt.first, pt.first), pt.first) == 0) overlap = true;
    rep.disjoint = !overlap;
    return rep;
}

} // namespace dlv::quasiell
