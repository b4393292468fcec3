#pragma once

// Root systems, Weyl groups, reduced words and Bruhat order, generated from
// Cartan matrices in exact integer arithmetic. Conventions:
//   C_ij = <alpha_i, alpha_j^vee>  (rows of the Cartan matrix),
//   s_i(alpha_j^vee) = alpha_j^vee - C_ij * alpha_i^vee,
//   a word (i1,...,in) denotes s_{i1}...s_{in} acting by w(v) = s_{i1}(s_{i2}(...v)).
// Letters in words are 1-based generator indices.

#include <string>
#include <vector>

namespace dlv::rootcore {

using IVec = std::vector<long long>;
using IMat = std::vector<IVec>; // row-major, square

struct CartanMatrix {
    int n = 0;
    IMat c;            // c[i][j] = C_{i+1,j+1}
    std::string label; // Dynkin type tag
};

// Catalog: "A1".."A4", "C2", "G2", "D4", "F4", and "A1x...xA1" products.
CartanMatrix cartan_matrix(const std::string &type);

// Throws std::invalid_argument on non-Cartan input (positive off-diagonal,
// asymmetric zero pattern, diagonal != 2).
void validate_cartan(const CartanMatrix &cm);

struct RootSystem {
    CartanMatrix cartan;
    std::vector<IVec> roots;   // simple-root coordinates
    std::vector<IVec> coroots; // simple-coroot coordinates, same indexing
    std::vector<bool> positive;

    int rank() const { return cartan.n; }
    std::vector<int> positive_indices() const;
    // Index of a root given by coordinates, or -1.
    int root_index(const IVec &root) const;
};

RootSystem build_root_system(const CartanMatrix &cm);

struct WeylElement {
    IMat matrix;           // action on the simple-coroot basis; column j = image of e_j
    std::vector<int> word; // canonical (lexicographically least) reduced word, 1-based

    int length() const { return static_cast<int>(word.size()); }
    bool operator==(const WeylElement &o) const { return matrix == o.matrix; }
    bool operator!=(const WeylElement &o) const { return !(*this == o); }
};

IMat identity_matrix(int n);
IMat mat_mul(const IMat &a, const IMat &b);
IVec mat_apply(const IMat &m, const IVec &v); // column-action: (Mv)

// Matrix of s_i (1-based) acting on simple coroots.
IMat generator_matrix(const RootSystem &rs, int i);

// Length = number of positive coroots sent to negative coroots.
int weyl_length(const RootSystem &rs, const IMat &m);

WeylElement weyl_identity(const RootSystem &rs);
// Builds the element of an arbitrary word (need not be reduced) and
// canonicalizes the stored word.
WeylElement weyl_from_word(const RootSystem &rs, const std::vector<int> &word);
WeylElement weyl_from_matrix(const RootSystem &rs, const IMat &m);
WeylElement weyl_mul(const RootSystem &rs, const WeylElement &a, const WeylElement &b);

// Complete group, sorted by (length, canonical word).
std::vector<WeylElement> weyl_group(const RootSystem &rs);

// Subword criterion; both elements must live in the same Weyl group.
bool bruhat_leq(const RootSystem &rs, const WeylElement &v, const WeylElement &w);

// All reduced words, lexicographically sorted.
std::vector<std::vector<int>> reduced_words(const RootSystem &rs, const WeylElement &w);

// Letter set of the canonical reduced word (identical across reduced words).
std::vector<int> support(const WeylElement &w);

} // namespace dlv::rootcore
