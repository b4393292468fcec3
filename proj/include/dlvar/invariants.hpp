#pragma once

// Canonical-divisor coefficients (Hansen's formula), zero-dimensional point
// counts over W^phi, and Deligne-Lusztig curve genera. All arithmetic exact.

#include "dlvar/dldatum.hpp"
#include "dlvar/rational.hpp"

#include <map>
#include <vector>

namespace dlv::invariants {

using dldatum::DLDatum;
using rootcore::WeylElement;

struct CanonicalCoefficients {
    std::vector<int> word;                         // the reduced word (1-based letters)
    std::vector<Rat> lambdas;                      // lambda_j = <mu, alpha~_j^vee> - 1
    std::vector<Rat> mu;                           // pairings <mu, alpha_i^vee>
    std::vector<rootcore::IVec> twisted_coroots;   // alpha~_j^vee coordinates
};

// Solves phi^*(w^{-1} mu) - mu = rho - phi^*(rho) for the unique rational mu
// (m = 1 normalization) and evaluates lambda_j against the twisted coroots
// alpha~_j^vee = s_{i1}...s_{i_{j-1}}(alpha_{ij}^vee). Throws on non-reduced
// words or a singular operator.
CanonicalCoefficients canonical_coefficients(const DLDatum &d, const std::vector<int> &word);

// Same computation with mu scaled by a positive integer m (consistency check:
// (<m mu, coroot> - m)/m must reproduce lambda_j).
std::vector<Rat> canonical_coefficients_scaled(const DLDatum &d, const std::vector<int> &word,
                                               const Int &m);

struct ZeroDimCount {
    std::string key;
    Int total = 0;
    std::vector<std::pair<WeylElement, Int>> summands; // w in W^phi -> q^{l(w)}
};

// |X(id)| = sum over W^phi of p^{s l(w) / r}; throws if r does not divide
// s*l(w) for some w.
ZeroDimCount zero_dim_count(const DLDatum &d);

// Genus via 2g - 2 = lambda_1 * N for the length-1 word (1); throws if the
// result is not a non-negative integer.
Int curve_genus(const DLDatum &d);

struct TableRow {
    Rat q;       // q (untwisted/Frobenius type) or q0 (Suzuki-Ree)
    Rat lambda1;
    Rat lambda2;
};

// Evaluates canonical coefficients for a catalog case across integral
// parameters. For Suzuki-Ree keys the values are exponents n (q0 = p^n
// displayed); otherwise they are actual prime powers q = p^s.
std::vector<TableRow> table_sweep(const std::string &key, long long p,
                                  const std::vector<int> &word, const std::vector<int> &params);

// Parses an actual q into (p, s) for non-Suzuki-Ree catalog keys.
std::pair<long long, int> split_prime_power(long long q);

} // namespace dlv::invariants
