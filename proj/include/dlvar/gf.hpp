#pragma once

// Small finite fields F_{p^k}, p in {2,3}, k <= 6. Elements are integers in
// [0, q) encoding polynomial residues: the value sum c_i p^i stands for the
// residue sum c_i x^i modulo the lexicographically smallest monic irreducible
// polynomial of degree k (ordering by the same base-p integer encoding).

#include <memory>
#include <vector>

namespace dlv::gf {

class FqField {
public:
    FqField(int p, int k);

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int inv(int a) const;
    int div(int a, int b) const { return mul(a, inv(b)); }
    int pow(int a, long long e) const;
    int frobenius(int a) const { return pow(a, p_); }

    // In characteristic 2 every element has the unique square root x^{2^{k-1}}.
    int sqrt2(int a) const;

    // Coefficients (ascending) of the modulus polynomial.
    const std::vector<int> &modulus() const { return modulus_; }

    // A multiplicative generator (smallest encoding).
    int generator() const { return generator_; }

    // Shared registry; fields are immutable after construction.
    static const FqField &get(int p, int k);

private:
    int p_, k_, q_;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_;
    std::vector<int> neg_, inv_;
    int generator_ = 0;
};

} // namespace dlv::gf
