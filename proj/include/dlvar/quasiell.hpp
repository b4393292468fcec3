#pragma once

// Characteristic-2 quasi-elliptic Weierstrass toolkit: quasi-discriminants
// with valuation profiles, coordinate changes, normal-form reduction,
// rational-double-point classification, and the elliptic census over F2.

#include "dlvar/gf.hpp"

#include <array>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dlv::quasiell {

using gf::FqField;

// Univariate polynomials over a small finite field, ascending coefficients;
// the zero polynomial is the empty vector. Exposed for test oracles.
using UPoly = std::vector<int>;
int up_deg(const UPoly &f);
UPoly up_trim(UPoly f);
UPoly up_add(const FqField &F, const UPoly &a, const UPoly &b);
UPoly up_mul(const FqField &F, const UPoly &a, const UPoly &b);
std::pair<UPoly, UPoly> up_divmod(const FqField &F, UPoly a, const UPoly &b);
UPoly up_gcd(const FqField &F, UPoly a, UPoly b);
UPoly up_derivative(const FqField &F, const UPoly &f);
std::string up_to_string(const FqField &F, const UPoly &f, const std::string &var);

// Monic irreducible factors with multiplicities (the unit leading coefficient
// is dropped); deterministic order.
std::vector<std::pair<UPoly, int>> up_factor(const FqField &F, UPoly f);

// Coefficient field: F_{2^m} (m <= 4) or the rational-function field
// F_{2^m}(u). Elements are reduced fractions of u-polynomials; constants have
// denominator 1.
struct CoefField {
    const FqField *base = nullptr;
    bool has_u = false;
    // Accepts "F2", "F4", "F8", "F16", "F2(u)", "F4(u)", ...
    static CoefField parse(const std::string &spec);
};

struct KElem {
    UPoly num;     // empty = zero
    UPoly den{1};  // monic, coprime to num
    bool operator==(const KElem &) const = default;
};

KElem k_zero();
KElem k_int(int c); // 0 or 1
KElem k_const(int c);
KElem k_u(const CoefField &k);
bool k_is_zero(const KElem &x);
KElem k_add(const CoefField &k, const KElem &a, const KElem &b);
KElem k_mul(const CoefField &k, const KElem &a, const KElem &b);
KElem k_div(const CoefField &k, const KElem &a, const KElem &b);
KElem k_inv(const CoefField &k, const KElem &a);
KElem k_pow(const CoefField &k, KElem a, int e);
bool k_is_square(const CoefField &k, const KElem &x);
KElem k_sqrt(const CoefField &k, const KElem &x); // pre: k_is_square
std::string k_to_string(const CoefField &k, const KElem &x);

// Does T^2 + T + c have a root in the coefficient field?
bool artin_schreier_split(const CoefField &k, const KElem &c);

// Polynomials in t over the coefficient field.
using TPoly = std::vector<KElem>;
int tp_deg(const TPoly &f);
TPoly tp_trim(TPoly f);
TPoly tp_add(const CoefField &k, const TPoly &a, const TPoly &b);
TPoly tp_mul(const CoefField &k, const TPoly &a, const TPoly &b);
TPoly tp_scale(const CoefField &k, const KElem &c, const TPoly &f);
TPoly tp_derivative(const CoefField &k, const TPoly &f);
bool tp_eq(const TPoly &a, const TPoly &b);
TPoly parse_tpoly(const CoefField &k, const std::string &text);
std::string tpoly_to_string(const CoefField &k, const TPoly &f);

struct ShortWeierstrass {
    CoefField k;
    TPoly a4, a6;
    int d = 2; // degree bound: deg a_i <= d*i
};

struct PlaceValuation {
    std::string place;
    int degree = 1;
    int val = 0;
};

struct QuasiDisc {
    TPoly psi;
    bool is_zero = false;
    // Full profile over finite coefficient fields; places t and t+1 only over
    // function fields (all any consumer here needs).
    std::vector<PlaceValuation> finite;
    long long val_inf = 0; // (12d-4) - deg psi
};

// Psi = a4 (Da4)^2 + (Da6)^2 with D = d/dt.
QuasiDisc quasi_discriminant(const ShortWeierstrass &w);

// u^4 a4' = a4 + s^4, u^6 a6' = a6 + tau^2 + s^2 (s^4 + a4).
ShortWeierstrass transform(const ShortWeierstrass &w, const KElem &u, const TPoly &s,
                           const TPoly &tau);

struct NormalForm {
    KElem lambda2, lambda6, mu; // a4 = l2 t^2 + l6 t^6, a6 = mu (t^5 + t^7)
};

// Coefficient elimination over a perfect finite base with d = 2; returns the
// failure reason (offending valuation or shape) when the hypotheses fail.
std::variant<NormalForm, std::string> normal_form_reduce(const ShortWeierstrass &w);

enum class RDPType { Regular, A1, C3, C5, C7, D4, D8, E8, G2rdp, Undecidable };
std::string rdp_name(RDPType t);

RDPType rdp_at_one(const CoefField &k, const KElem &l2, const KElem &l6, const KElem &mu);
RDPType rdp_at_zero(const CoefField &k, const KElem &l2, const KElem &l6, const KElem &mu,
                    bool swap);

// Types at t = 0, 1, infinity of y^2 = x^3 + alpha^3 (t^5 + t^7).
std::array<RDPType, 3> classify_k3_family(const CoefField &k, int alpha);

// The five elliptic curves over F2, with honest automorphism counts.
struct EllipticClass {
    std::array<int, 5> rep; // a1, a2, a3, a4, a6
    int point_count = 0;
    int aut_order = 0;
    int orbit_size = 0;
};
std::vector<EllipticClass> elliptic_census_f2(); // sorted by point_count

struct ResidualDivisorReport {
    int d_rational_points = 0;
    std::vector<int> dprime_place_degrees;
    bool disjoint = false; // D, D' disjoint from each other and the origin
};
ResidualDivisorReport residual_divisor_points();

} // namespace dlv::quasiell
