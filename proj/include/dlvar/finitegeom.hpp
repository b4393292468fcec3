#pragma once

// Finite-field linear algebra, flags in dimensions 3 and 4, relative position
// of flags, strata enumeration, the Sp4 building, and small curve counts.

#include "dlvar/gf.hpp"
#include "dlvar/rootcore.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dlv::finitegeom {

using gf::FqField;
using Vec = std::vector<int>;
using Mat = std::vector<Vec>;

// Row-reduce in place to the canonical reduced row-echelon form; zero rows are
// dropped. Returns the rank.
int rref(const FqField &F, Mat &m);
int rank_of(const FqField &F, Mat m);

// The fixed alternating form J = [[0,R],[R,0]] with R antidiagonal (char 2
// makes -R = R); in odd characteristic the lower block is -R.
int symplectic_pair(const FqField &F, const Vec &u, const Vec &v);

enum class FlagKind { FullA, IsoC2 };

// A flag L < U with dim L = 1, dim U = 2, stored as canonical echelon bases.
// FullA lives in dimension 3; IsoC2 in dimension 4 with U totally isotropic
// (hence U = U-perp), which encodes the full symplectic flag L < U < L-perp.
struct FlagConfig {
    const FqField *field = nullptr;
    FlagKind kind = FlagKind::FullA;
    Mat line;  // 1 x n
    Mat plane; // 2 x n
    bool operator==(const FlagConfig &o) const
    {
        return kind == o.kind && line == o.line && plane == o.plane;
    }
    auto operator<=>(const FlagConfig &o) const
    {
        if (auto c = kind <=> o.kind; c != 0) return c;
        if (auto c = line <=> o.line; c != 0) return c;
        return plane <=> o.plane;
    }
};

// Canonicalize and validate (containment, isotropy for IsoC2).
FlagConfig make_flag(const FqField &F, FlagKind kind, Mat line, Mat plane);

std::vector<FlagConfig> enumerate_flags(const FqField &F, FlagKind kind);

// The unique Weyl element whose intersection-dimension profile matches the
// pair: type A2 for FullA flags, type C2 for IsoC2 flags (via the
// signed-permutation embedding s1 = (12)(34), s2 = (23) into S4).
rootcore::WeylElement relative_position(const FlagConfig &f, const FlagConfig &g);

// Histogram over all flags of the relative position between a flag and its
// image under phi, keyed by the canonical reduced word.
using Histogram = std::map<std::vector<int>, long long>;
Histogram strata_histogram_generic(const std::vector<FlagConfig> &flags,
                                   const std::function<FlagConfig(const FlagConfig &)> &phi);

// case_key "A2" (phi = coordinatewise q-Frobenius) or "2A2" (unitary phi);
// flags enumerated over F_{q^ext} resp. F_{q^{2*ext}}... concretely the field
// F_{p^{s*ext}} for q = p^s, with 2A2 requiring the q-involution, so ext even
// or the field extended to contain F_{q^2}.
Histogram strata_histogram(const std::string &case_key, long long q, int ext);

// Coordinatewise q-power Frobenius on the echelon representative.
FlagConfig frobenius_flag(const FlagConfig &f, long long q);

// (L < U) -> (U-perp < L-perp) for the Hermitian pairing <u,v> = t(u^(q)) J v,
// J the 3x3 antidiagonal; the field must be F_{q^{2m}}.
FlagConfig unitary_phi(const FlagConfig &f, long long q);

// Projective solutions of X^q Z + Y^{q+1} + Z^q X = 0 over F_{q^k} (signs per
// the defining form; immaterial in char 2).
long long hermitian_count(long long q, int k);

// True iff the bihomogeneous system x.y = 0, y0 y2^q - y1^{q+1} + y2 y0^q = 0
// in P2 x P2 cuts out exactly the pairs (L, dual coords of U) with L < U and
// U-perp < U.
bool surface_equations_check(long long q, int k);

struct IncidenceGraph {
    // tag 0 = line, 1 = isotropic plane.
    std::vector<int> tag;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;
    int vertex_count() const { return (int)tag.size(); }
};

IncidenceGraph building_sp4(int p);
int girth(const IncidenceGraph &g);
bool is_connected(const IncidenceGraph &g);
bool is_bipartite_by_tag(const IncidenceGraph &g);

// Backtracking search for an induced copy of the 22-vertex tree Gamma (shared
// with the lattice module); returns Gamma-vertex -> host-vertex or nullopt.
std::optional<std::vector<int>> find_gamma_embedding(const IncidenceGraph &g);

// The 22-vertex tree itself as an IncidenceGraph (tags by bipartition class).
IncidenceGraph gamma_graph();

long long ree_point_count(int k);
long long ree_affine_count(int k);

std::string to_dot(const IncidenceGraph &g);
std::string to_edge_list(const IncidenceGraph &g);

// Enumeration guardrail: default 10^7 states, overridable via DLVAR_MAX_ENUM.
long long max_enum();
void check_enum_budget(long long states);

} // namespace dlv::finitegeom
