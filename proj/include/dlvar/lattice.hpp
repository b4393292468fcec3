#pragma once

// Integer symmetric bilinear forms: signature by rational congruence
// diagonalization, saturated radical bases, Smith normal form, discriminant
// groups; the 22-vertex configuration lattice and the K3 Gram ledger.

#include "dlvar/rational.hpp"

#include <string>
#include <vector>

namespace dlv::lattice {

using Mat = std::vector<std::vector<Int>>;

struct IntLattice {
    Mat gram;
    int rank() const { return (int)gram.size(); }
};

struct Signature {
    int plus = 0, minus = 0, zero = 0;
    bool operator==(const Signature &) const = default;
};

// The 22-vertex dual graph Gamma: vertex order
// gamma0..gamma8, delta0..delta8, rho, eps0, eps1, eps2 (indices 0..21).
const std::vector<std::string> &gamma_vertex_names();
const std::vector<std::pair<int, int>> &gamma_edges(); // 21 tree edges

// N = -2E + A for the graph Gamma.
IntLattice gamma_lattice();

// Coefficient vectors a = 2g1+3g2+4g3+6g4+5g5+4g6+3g7+2g8+g0 and the delta
// analogue b, in the vertex order above.
std::vector<Int> gamma_vector_a();
std::vector<Int> gamma_vector_b();
std::vector<Int> gamma_vector_rho(); // indicator of the rho vertex

Signature signature(const IntLattice &L);

// Saturated integral kernel basis (from the Smith decomposition, so each
// generator is primitive and the basis spans the full radical).
std::vector<std::vector<Int>> radical_basis(const IntLattice &L);

// The 6x6 K3 Gram matrix with Kronecker-delta markers at position n and
// parameter c; det matches -(8c+16), -(8c+13), -(8c+12) for n = 0, 1, 2.
IntLattice gram_S(int n, const Int &c);
Int det(const IntLattice &L);

// Smith normal form diagonal d_1 | d_2 | ... (non-negative, zeros last).
std::vector<Int> smith_invariants(const IntLattice &L);

// Every nontrivial invariant factor equals p.
bool is_p_elementary(const IntLattice &L, const Int &p);

// Bilinear pairing v^T gram w.
Int pair(const IntLattice &L, const std::vector<Int> &v, const std::vector<Int> &w);

// Negative E8 Gram matrix (Bourbaki ordering), for oracles and fixtures.
IntLattice neg_e8();

} // namespace dlv::lattice
