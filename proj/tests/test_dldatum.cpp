#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dlvar/dldatum.hpp"

#include <numeric>
#include <set>

using namespace dlv;
using namespace dlv::dldatum;
using rootcore::build_root_system;
using rootcore::cartan_matrix;

TEST_CASE("validate_isogeny on the quoted examples")
{
    auto c2 = build_root_system(cartan_matrix("C2"));
    CHECK(validate_isogeny(c2, 2, {1, 0}, {1, 0}));
    // Suzuki forces p=2: -p^{s1} = -2 p^{s2} has no solution for p=3.
    for (int s1 = 0; s1 <= 4; ++s1)
        for (int s2 = 0; s2 <= 4; ++s2)
            CHECK_FALSE(validate_isogeny(c2, 3, {1, 0}, {s1, s2}));

    auto a2 = build_root_system(cartan_matrix("A2"));
    CHECK(validate_isogeny(a2, 2, {0, 1}, {1, 1})); // phi_* = p id
}

TEST_CASE("enumerate_isogenies: F4 flip forces s1=s2, s4=s3=s2+1")
{
    auto f4 = build_root_system(cartan_matrix("F4"));
    auto data = enumerate_isogenies(f4, 2, 2);
    std::vector<int> flip{3, 2, 1, 0};
    int with_flip = 0;
    for (auto &d : data) {
        if (d.perm != flip) continue;
        ++with_flip;
        CHECK(d.exps[0] == d.exps[1]);
        CHECK(d.exps[3] == d.exps[2]);
        CHECK(d.exps[2] == d.exps[1] + 1);
    }
    CHECK(with_flip == 2); // n = 0, 1 within max_exp 2
}

TEST_CASE("enumerate_isogenies: G2 twist exists for p=3 and not for p=2")
{
    auto g2 = build_root_system(cartan_matrix("G2"));
    auto data3 = enumerate_isogenies(g2, 3, 2);
    bool has_twist3 = false;
    for (auto &d : data3)
        if (d.perm == std::vector<int>{1, 0}) has_twist3 = true;
    CHECK(has_twist3);

    auto data2 = enumerate_isogenies(g2, 2, 4);
    for (auto &d : data2) CHECK(d.perm != std::vector<int>{1, 0});
}

TEST_CASE("enumerate_isogenies: A2 flip with equal exponents; list is sorted")
{
    auto a2 = build_root_system(cartan_matrix("A2"));
    auto data = enumerate_isogenies(a2, 2, 1);
    bool has_flip = false;
    for (auto &d : data)
        if (d.perm == std::vector<int>{1, 0}) {
            has_flip = true;
            CHECK(d.exps[0] == d.exps[1]);
        }
    CHECK(has_flip);
    for (size_t i = 1; i < data.size(); ++i)
        CHECK(std::pair(data[i - 1].perm, data[i - 1].exps) < std::pair(data[i].perm, data[i].exps));
}

TEST_CASE("minimal exponents")
{
    auto a2 = build_root_system(cartan_matrix("A2"));
    CHECK(minimal_exponents(a2, 2, {1, 0}, {1, 1}) == std::pair(2, 2));
    CHECK(minimal_exponents(a2, 2, {0, 1}, {1, 1}) == std::pair(1, 1));
    auto c2 = build_root_system(cartan_matrix("C2"));
    CHECK(minimal_exponents(c2, 2, {1, 0}, {1, 0}) == std::pair(2, 1));
}

TEST_CASE("minimal exponents are primitive: every solution is a multiple")
{
    for (auto key : {std::string("2A2"), std::string("2C2"), std::string("3D4")}) {
        long long p = key == "2C2" ? 2 : 2;
        auto d = catalog_datum(key, p, key == "2C2" ? 0 : 1);
        // Scan all (r', s') with r' <= 6: phi^{r'} scalar implies (r', s') is a
        // multiple of (d.r, d.s).
        int n = d.rs.rank();
        std::vector<int> cur_perm(n), cur_exp(n, 0);
        std::iota(cur_perm.begin(), cur_perm.end(), 0);
        for (int r = 1; r <= 6; ++r) {
            for (int i = 0; i < n; ++i) {
                cur_exp[i] += d.exps[cur_perm[i]];
                cur_perm[i] = d.perm[cur_perm[i]];
            }
            bool scalar = true;
            for (int i = 0; i < n; ++i)
                if (cur_perm[i] != i || cur_exp[i] != cur_exp[0]) scalar = false;
            if (scalar) {
                CHECK(r % d.r == 0);
                CHECK(cur_exp[0] == (r / d.r) * d.s);
            }
        }
    }
}

TEST_CASE("frobenius type iff constant exponents")
{
    CHECK(is_frobenius_type(catalog_datum("2A2", 2, 1)));
    CHECK_FALSE(is_frobenius_type(catalog_datum("2C2", 2, 0)));
    CHECK(is_frobenius_type(catalog_datum("C2", 2, 1)));
}

TEST_CASE("phi-fixed Weyl elements")
{
    auto sz = catalog_datum("2C2", 2, 0);
    auto fixed = phi_fixed_weyl(sz);
    REQUIRE(fixed.size() == 2);
    CHECK(fixed[0].length() == 0);
    CHECK(fixed[1].length() == 4); // w0

    auto a2 = catalog_datum("A2", 2, 1);
    CHECK(phi_fixed_weyl(a2).size() == 6); // central phi_*

    auto u3 = catalog_datum("2A2", 2, 1);
    auto fixed_u3 = phi_fixed_weyl(u3);
    REQUIRE(fixed_u3.size() == 2);
    CHECK(fixed_u3[1].length() == 3);

    auto ree = catalog_datum("2G2", 3, 0);
    auto fixed_ree = phi_fixed_weyl(ree);
    REQUIRE(fixed_ree.size() == 2);
    CHECK(fixed_ree[1].length() == 6);
}

TEST_CASE("phi support and phi-Coxeter predicate")
{
    auto u3 = catalog_datum("2A2", 2, 1);
    auto s1 = rootcore::weyl_from_word(u3.rs, {1});
    auto s1s2 = rootcore::weyl_from_word(u3.rs, {1, 2});
    CHECK(phi_support(u3, s1) == std::vector<int>{1, 2});
    CHECK(is_phi_coxeter(u3, s1));
    CHECK(is_phi_coxeter(u3, rootcore::weyl_from_word(u3.rs, {2})));
    CHECK_FALSE(is_phi_coxeter(u3, s1s2));

    auto a2 = catalog_datum("A2", 2, 1);
    CHECK(phi_support(a2, s1) == std::vector<int>{1});
    CHECK(is_phi_coxeter(a2, rootcore::weyl_from_word(a2.rs, {1, 2})));
    CHECK_FALSE(is_phi_coxeter(a2, rootcore::weyl_from_word(a2.rs, {1})));
}

TEST_CASE("conjugation by the isogeny matrix permutes the generators by d")
{
    for (auto key : {std::string("2A2"), std::string("2C2"), std::string("2G2"),
                     std::string("3D4"), std::string("2F4")}) {
        long long p = key == "2G2" ? 3 : 2;
        auto d = catalog_datum(key, p, 1);
        auto phi = d.isogeny_matrix();
        for (int i = 1; i <= d.rs.rank(); ++i) {
            auto lhs = rootcore::mat_mul(phi, rootcore::generator_matrix(d.rs, i));
            auto rhs = rootcore::mat_mul(rootcore::generator_matrix(d.rs, d.perm[i - 1] + 1), phi);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("validation is invariant under diagram relabeling (A2 swap)")
{
    // Relabeling 1<->2 of A2 maps (perm, exps) to conjugated data; validity is
    // preserved for every candidate.
    auto a2 = build_root_system(cartan_matrix("A2"));
    for (int perm_flag = 0; perm_flag < 2; ++perm_flag)
        for (int s1 = 0; s1 <= 2; ++s1)
            for (int s2 = 0; s2 <= 2; ++s2) {
                std::vector<int> perm = perm_flag ? std::vector<int>{1, 0}
                                                  : std::vector<int>{0, 1};
                std::vector<int> exps{s1, s2};
                // sigma = (12): perm' = sigma perm sigma, exps' = exps o sigma
                std::vector<int> perm2{1 - perm[1], 1 - perm[0]};
                std::vector<int> exps2{s2, s1};
                CHECK(validate_isogeny(a2, 2, perm, exps) ==
                      validate_isogeny(a2, 2, perm2, exps2));
            }
}

TEST_CASE("Weil restriction products validate with minimal exponents (d, d*s0)")
{
    auto w2 = catalog_datum("weil-A1xA1", 2, 1);
    CHECK(w2.r == 2);
    CHECK(w2.s == 2);
    auto w3 = catalog_datum("weil-A1xA1xA1", 3, 2);
    CHECK(w3.r == 3);
    CHECK(w3.s == 6);
}

TEST_CASE("catalog rejects wrong primes and unknown keys")
{
    CHECK_THROWS(catalog_datum("2C2", 3, 0));
    CHECK_THROWS(catalog_datum("2G2", 2, 0));
    CHECK_THROWS(catalog_datum("B17", 2, 1));
}
