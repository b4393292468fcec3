#pragma once

// The explicit 2-minor isogeny of Sp4 in characteristic 2, the Suzuki group
// Sz(2) = <A,S>, the induced map on isotropic flags, and the Lie-algebra
// kernel of the isogeny.

#include "dlvar/finitegeom.hpp"

#include <array>
#include <set>
#include <vector>

namespace dlv::sp4suzuki {

using finitegeom::FlagConfig;
using finitegeom::FqField;
using finitegeom::Mat;
using finitegeom::Vec;

bool is_symplectic(const FqField &F, const Mat &s);

// The 4x4 matrix of 2-minors on the row/column index pairs
// (1,2), (1,3), (2,4), (3,4); a homomorphism Sp4 -> Sp4 with square the
// entrywise Frobenius.
Mat minor_isogeny(const FqField &F, const Mat &s);

// Same matrix over the dual numbers F[eps], eps^2 = 0; entries are pairs
// (value, eps-part).
using Dual = std::pair<int, int>;
using DualMat = std::vector<std::vector<Dual>>;
DualMat minor_isogeny_dual(const FqField &F, const DualMat &s);

// Generators of Sz(2) inside Sp4(F2).
Mat suzuki_A();
Mat suzuki_S();

struct SuzukiGroup {
    std::vector<Mat> elements; // closure of {A, S}, element 0 = identity
    std::vector<std::vector<int>> table;
    std::vector<int> orders;
    std::set<int> normal_subgroup_orders;
    int index_of(const Mat &m) const;
};
const SuzukiGroup &suzuki_group();

// Completes an isotropic flag to a symplectic matrix with Gram J (columns
// v1 in L, v2 in U, then v3, v4 with <v1,v4> = <v2,v3> = 1). The offset
// selects a later candidate for v4, for well-definedness checks.
Mat symplectic_completion(const FlagConfig &f, int offset = 0);

// Effect of the isogeny on isotropic flags, via completion + minor_isogeny.
FlagConfig phi_on_flags(const FlagConfig &f, int offset = 0);

// Image flag of a linear action v -> m.v on the flag's subspaces.
FlagConfig act_on_flag(const Mat &m, const FlagConfig &f);

// |{T in sp4(F2) : minor_isogeny(I + eps T) = I}|; the kernel is cut out by
// a = d, v = w = 0, y = z = 0 in the block coordinates.
long long lie_kernel_count();

// All 2^10 block matrices of sp4(F2) in the coordinate order
// (a, b, c, d, u, v, w, x, y, z).
Mat sp4_block_matrix(const std::array<int, 10> &coords);

// Histogram of relative positions between isotropic flags over F_{2^k} and
// their phi_on_flags images.
finitegeom::Histogram c2twist_strata(int k);

} // namespace dlv::sp4suzuki
