#pragma once

// Deligne-Lusztig data: a root system plus a prime p and a monomial
// p-morphism phi_* with phi_*(alpha_i^vee) = p^{s_i} alpha_{d(i)}^vee.
// Validation reduces to the Cartan compatibility
//   p^{s_i} C_{d(j),d(i)} = p^{s_j} C_{j,i}   for all i, j.

#include "dlvar/rootcore.hpp"

#include <string>
#include <vector>

namespace dlv::dldatum {

using rootcore::IMat;
using rootcore::RootSystem;
using rootcore::WeylElement;

struct DLDatum {
    RootSystem rs;
    long long p = 0;
    std::vector<int> perm; // d, 0-based: perm[i] = d(i+1)-1
    std::vector<int> exps; // s_i >= 0
    int r = 0, s = 0;      // minimal exponents: phi_*^r = p^s id
    std::string key;       // catalog key when built from the catalog, else ""

    // phi_* on the simple-coroot basis: column i = p^{s_i} e_{d(i)}.
    IMat isogeny_matrix() const;
};

bool validate_isogeny(const RootSystem &rs, long long p, const std::vector<int> &perm,
                      const std::vector<int> &exps);

// All valid (perm, exps) with every exponent <= max_exp, sorted by (perm, exps).
std::vector<DLDatum> enumerate_isogenies(const RootSystem &rs, long long p, int max_exp);

// Smallest positive (r, s) with phi_*^r = p^s id; r is scanned from 1 upward.
std::pair<int, int> minimal_exponents(const RootSystem &rs, long long p,
                                      const std::vector<int> &perm, const std::vector<int> &exps);

// Frobenius type: the exponent map is constant on simple roots.
bool is_frobenius_type(const DLDatum &d);

// W^phi: elements commuting with the isogeny matrix.
std::vector<WeylElement> phi_fixed_weyl(const DLDatum &d);

// Smallest d-stable superset of Supp(w); 1-based indices, sorted.
std::vector<int> phi_support(const DLDatum &d, const WeylElement &w);

// Each d-orbit of simple indices meets Supp(w) exactly once, and w is a
// product of |Supp(w)| distinct generators.
bool is_phi_coxeter(const DLDatum &d, const WeylElement &w);

// Catalog. Keys: "A1", "A2", "2A2", "2A3", "2A4", "C2", "2C2", "G2", "2G2",
// "D4", "3D4", "F4", "2F4", and Weil-restriction products "weil-A1xA1",
// "weil-A1xA1xA1", ... (cyclic shift times p^param). Untwisted and
// Frobenius-type keys take (p, param = s); Suzuki-Ree keys ("2C2", "2G2",
// "2F4") fix p and take param = n. Throws on unknown keys or invalid p.
DLDatum catalog_datum(const std::string &key, long long p, int param);

// The prime is forced for "2C2"/"2F4" (p=2) and "2G2" (p=3).
bool catalog_key_fixes_prime(const std::string &key, long long &p_out);

} // namespace dlv::dldatum
