#include "dlvar/gf.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace dlv::gf {

namespace {

std::vector<int> decode(int value, int p, int len)
{
    std::vector<int> digits(len, 0);
    for (int i = 0; i < len && value; ++i) {
        digits[i] = value % p;
        value /= p;
    }
    return digits;
}

int encode(const std::vector<int> &digits, int p)
{
    int value = 0;
    for (int i = (int)digits.size() - 1; i >= 0; --i) value = value * p + digits[i];
    return value;
}

// Plain polynomial arithmetic on coefficient vectors mod p.
std::vector<int> poly_mul_mod(const std::vector<int> &a, const std::vector<int> &b,
                              const std::vector<int> &modulus, int p)
{
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    // Reduce by the monic modulus.
    int k = (int)modulus.size() - 1;
    for (int d = (int)prod.size() - 1; d >= k; --d) {
        int c = prod[d];
        if (c == 0) continue;
        for (int i = 0; i <= k; ++i) {
            int idx = d - k + i;
            prod[idx] = ((prod[idx] - c * modulus[i]) % p + p) % p;
        }
    }
    prod.resize(k);
    return prod;
}

bool is_irreducible(const std::vector<int> &f, int p)
{
    int k = (int)f.size() - 1;
    if (k == 1) return true;
    // Trial division by every monic polynomial of degree 1..k/2.
    for (int d = 1; 2 * d <= k; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int low = 0; low < count; ++low) {
            std::vector<int> g = decode(low, p, d + 1);
            g[d] = 1;
            // Long division remainder of f by g.
            std::vector<int> rem = f;
            for (int dd = (int)rem.size() - 1; dd >= d; --dd) {
                int c = rem[dd];
                if (c == 0) continue;
                for (int i = 0; i <= d; ++i) {
                    int idx = dd - d + i;
                    rem[idx] = ((rem[idx] - c * g[i]) % p + p) % p;
                }
            }
            bool zero = true;
            for (int i = 0; i < d; ++i)
                if (rem[i]) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

} // namespace

FqField::FqField(int p, int k) : p_(p), k_(k)
{
    if ((p != 2 && p != 3) || k < 1 || k > 6)
        throw std::invalid_argument("FqField: supported p in {2,3}, k <= 6");
    q_ = 1;
    for (int i = 0; i < k; ++i) q_ *= p;

    // Lexicographically smallest monic irreducible of degree k.
    for (int low = 0;; ++low) {
        if (low >= q_) throw std::logic_error("no irreducible polynomial found");
        std::vector<int> f = decode(low, p, k + 1);
        f[k] = 1;
        if (is_irreducible(f, p)) {
            modulus_ = f;
            break;
        }
    }

    add_.resize((size_t)q_ * q_);
    mul_.resize((size_t)q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (int a = 0; a < q_; ++a) {
        auto da = decode(a, p, k);
        std::vector<int> dn(k);
        for (int i = 0; i < k; ++i) dn[i] = (p - da[i]) % p;
        neg_[a] = encode(dn, p);
        for (int b = 0; b <= a; ++b) {
            auto db = decode(b, p, k);
            std::vector<int> ds(k);
            for (int i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p;
            int s = encode(ds, p);
            add_[(size_t)a * q_ + b] = add_[(size_t)b * q_ + a] = s;
            int m = encode(poly_mul_mod(da, db, modulus_, p), p);
            mul_[(size_t)a * q_ + b] = mul_[(size_t)b * q_ + a] = m;
        }
    }
    for (int a = 1; a < q_; ++a)
        for (int b = 1; b < q_; ++b)
            if (mul(a, b) == 1) {
                inv_[a] = b;
                break;
            }
    for (int g = 2; g < q_ || q_ == 2; ++g) {
        if (q_ == 2) {
            generator_ = 1;
            break;
        }
        int x = g, order = 1;
        while (x != 1) {
            x = mul(x, g);
            ++order;
        }
        if (order == q_ - 1) {
            generator_ = g;
            break;
        }
    }
}

int FqField::inv(int a) const
{
    if (a == 0) throw std::domain_error("division by zero in F_q");
    return inv_[a];
}

int FqField::pow(int a, long long e) const
{
    if (e < 0) return pow(inv(a), -e);
    int result = 1, base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

int FqField::sqrt2(int a) const
{
    if (p_ != 2) throw std::logic_error("sqrt2 requires characteristic 2");
    long long e = 1;
    for (int i = 0; i < k_ - 1; ++i) e *= 2;
    return pow(a, e);
}

const FqField &FqField::get(int p, int k)
{
    static std::map<std::pair<int, int>, std::unique_ptr<FqField>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto &slot = cache[{p, k}];
    if (!slot) slot = std::make_unique<FqField>(p, k);
    return *slot;
}

} // namespace dlv::gf
