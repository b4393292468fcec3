#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dlvar/rootcore.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace dlv::rootcore;

namespace {

// Independent oracle: generate the root set by closing the simple roots under
// *all* reflections s_beta(x) = x - <x, beta^vee> beta, working purely on
// root coordinates and recomputing <x, beta^vee> from the Cartan pairing.
// This is deliberately redundant with the library closure (which only uses
// simple reflections) so the two can cross-check each other.
std::set<IVec> closure_oracle(const CartanMatrix &cm)
{
    int n = cm.n;
    auto pairing = [&](const IVec &x, const IVec &beta, const IVec &beta_coroot) {
        // <x, beta^vee> with beta^vee expanded in simple coroots.
        (void)beta;
        long long v = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v += x[i] * cm.c[i][j] * beta_coroot[j];
        return v;
    };
    // Track (root, coroot) pairs; run full passes until no new pair appears,
    // so the set really is closed under every reflection it contains.
    std::set<std::pair<IVec, IVec>> seen;
    for (int i = 0; i < n; ++i) {
        IVec e(n, 0);
        e[i] = 1;
        seen.insert({e, e});
    }
    bool changed = true;
    while (changed) {
        changed = false;
        auto snapshot = std::vector(seen.begin(), seen.end());
        for (auto &[b, bc] : snapshot) {
            for (auto &[x, xc] : snapshot) {
                long long k = pairing(x, b, bc);
                // s_b(x) = x - <x,b^vee> b;  s_b(x^vee) = x^vee - <b, x^vee> b^vee
                IVec y = x, yc = xc;
                for (int i = 0; i < n; ++i) y[i] -= k * b[i];
                long long k2 = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) k2 += b[i] * cm.c[i][j] * xc[j];
                for (int i = 0; i < n; ++i) yc[i] -= k2 * bc[i];
                if (seen.insert({y, yc}).second) changed = true;
            }
        }
    }
    std::set<IVec> roots;
    for (auto &[r, rc] : seen) roots.insert(r);
    return roots;
}

} // namespace

TEST_CASE("catalog root counts match the reflection-closure oracle")
{
    const std::map<std::string, int> expected = {
        {"A2", 6}, {"A3", 12}, {"A4", 20}, {"C2", 8}, {"G2", 12}, {"D4", 24}, {"F4", 48}};
    for (auto &[type, count] : expected) {
        auto cm = cartan_matrix(type);
        auto oracle = closure_oracle(cm);
        CHECK_MESSAGE((int)oracle.size() == count, type);
        auto rs = build_root_system(cm);
        CHECK_MESSAGE((int)rs.roots.size() == count, type);
        std::set<IVec> got(rs.roots.begin(), rs.roots.end());
        CHECK(got == oracle);
    }
}

TEST_CASE("rank-1 root system is {alpha, -alpha}")
{
    auto rs = build_root_system(cartan_matrix("A1"));
    std::set<IVec> got(rs.roots.begin(), rs.roots.end());
    CHECK(got == std::set<IVec>{{1}, {-1}});
}

TEST_CASE("root systems are symmetric and sign-partitioned")
{
    for (std::string type : {"A2", "A4", "C2", "G2", "D4", "F4"}) {
        auto rs = build_root_system(cartan_matrix(type));
        std::set<IVec> got(rs.roots.begin(), rs.roots.end());
        int positives = 0;
        for (size_t i = 0; i < rs.roots.size(); ++i) {
            IVec neg = rs.roots[i];
            for (auto &x : neg) x = -x;
            CHECK(got.count(neg) == 1);
            if (rs.positive[i]) ++positives;
        }
        CHECK(positives * 2 == (int)rs.roots.size());
    }
}

TEST_CASE("invalid Cartan input is rejected")
{
    CartanMatrix bad1{2, {{2, 1}, {-1, 2}}, "bad"};
    CHECK_THROWS(validate_cartan(bad1));
    CartanMatrix bad2{2, {{2, 0}, {-1, 2}}, "bad"};
    CHECK_THROWS(validate_cartan(bad2));
    CartanMatrix bad3{2, {{1, -1}, {-1, 2}}, "bad"};
    CHECK_THROWS(validate_cartan(bad3));
    CHECK_THROWS(cartan_matrix("E8"));
}

TEST_CASE("Weyl group sizes")
{
    const std::map<std::string, size_t> expected = {
        {"A2", 6}, {"C2", 8}, {"G2", 12}, {"A4", 120}, {"D4", 192}, {"F4", 1152}};
    for (auto &[type, count] : expected) {
        auto rs = build_root_system(cartan_matrix(type));
        CHECK_MESSAGE(weyl_group(rs).size() == count, type);
    }
}

TEST_CASE("A1 Weyl group is {e, s} with lengths {0, 1}")
{
    auto rs = build_root_system(cartan_matrix("A1"));
    auto w = weyl_group(rs);
    REQUIRE(w.size() == 2);
    CHECK(w[0].length() == 0);
    CHECK(w[1].length() == 1);
}

TEST_CASE("A2 Weyl group is isomorphic to S3; C2 longest element has length 4")
{
    auto rs = build_root_system(cartan_matrix("A2"));
    auto grp = weyl_group(rs);
    std::map<int, int> order_histogram;
    for (auto &w : grp) {
        IMat m = w.matrix;
        int ord = 1;
        while (m != identity_matrix(2)) {
            m = mat_mul(m, w.matrix);
            ++ord;
        }
        ++order_histogram[ord];
    }
    CHECK(order_histogram == std::map<int, int>{{1, 1}, {2, 3}, {3, 2}});

    auto rs_c2 = build_root_system(cartan_matrix("C2"));
    auto grp_c2 = weyl_group(rs_c2);
    CHECK(grp_c2.back().length() == 4);
}

TEST_CASE("length from the matrix equals canonical word length")
{
    for (std::string type : {"A2", "C2", "G2", "D4"}) {
        auto rs = build_root_system(cartan_matrix(type));
        for (auto &w : weyl_group(rs))
            CHECK(weyl_length(rs, w.matrix) == w.length());
    }
}

TEST_CASE("Weyl elements permute the coroot set")
{
    for (std::string type : {"A2", "C2", "G2"}) {
        auto rs = build_root_system(cartan_matrix(type));
        std::set<IVec> coroots(rs.coroots.begin(), rs.coroots.end());
        for (auto &w : weyl_group(rs)) {
            std::set<IVec> image;
            for (auto &cr : rs.coroots) image.insert(mat_apply(w.matrix, cr));
            CHECK(image == coroots);
        }
    }
}

TEST_CASE("Bruhat order basics")
{
    auto rs = build_root_system(cartan_matrix("C2"));
    auto e = weyl_identity(rs);
    auto s1 = weyl_from_word(rs, {1});
    auto s2 = weyl_from_word(rs, {2});
    auto s2s1 = weyl_from_word(rs, {2, 1});
    for (auto &w : weyl_group(rs)) CHECK(bruhat_leq(rs, e, w));
    CHECK(bruhat_leq(rs, s1, s2s1));
    CHECK_FALSE(bruhat_leq(rs, s2, s1));

    auto rs_a2 = build_root_system(cartan_matrix("A2"));
    auto v = weyl_from_word(rs_a2, {1, 2});
    auto w = weyl_from_word(rs_a2, {2, 1});
    CHECK_FALSE(bruhat_leq(rs_a2, v, w));
    CHECK_FALSE(bruhat_leq(rs_a2, w, v));
}

TEST_CASE("Bruhat order is reflexive, antisymmetric and length-monotone")
{
    for (std::string type : {"A2", "C2"}) {
        auto rs = build_root_system(cartan_matrix(type));
        auto grp = weyl_group(rs);
        for (auto &v : grp)
            for (auto &w : grp) {
                bool le = bruhat_leq(rs, v, w);
                if (v == w) CHECK(le);
                if (le && v != w) {
                    CHECK(v.length() < w.length());
                    CHECK_FALSE(bruhat_leq(rs, w, v));
                }
            }
    }
}

TEST_CASE("reduced words")
{
    auto rs_c2 = build_root_system(cartan_matrix("C2"));
    auto w0_c2 = weyl_from_word(rs_c2, {1, 2, 1, 2});
    CHECK(reduced_words(rs_c2, w0_c2) ==
          std::vector<std::vector<int>>{{1, 2, 1, 2}, {2, 1, 2, 1}});
    auto s1 = weyl_from_word(rs_c2, {1});
    CHECK(reduced_words(rs_c2, s1) == std::vector<std::vector<int>>{{1}});

    auto rs_a2 = build_root_system(cartan_matrix("A2"));
    auto w0_a2 = weyl_from_word(rs_a2, {1, 2, 1});
    CHECK(reduced_words(rs_a2, w0_a2) == std::vector<std::vector<int>>{{1, 2, 1}, {2, 1, 2}});
}

TEST_CASE("support is well defined across all reduced words")
{
    for (std::string type : {"A2", "C2", "G2"}) {
        auto rs = build_root_system(cartan_matrix(type));
        for (auto &w : weyl_group(rs)) {
            auto supp = support(w);
            for (auto &word : reduced_words(rs, w)) {
                std::set<int> letters(word.begin(), word.end());
                CHECK(std::vector<int>(letters.begin(), letters.end()) == supp);
            }
        }
    }
}

TEST_CASE("canonical words are lexicographically least and words canonicalize")
{
    auto rs = build_root_system(cartan_matrix("C2"));
    for (auto &w : weyl_group(rs)) {
        auto words = reduced_words(rs, w);
        CHECK(w.word == words.front());
    }
    // A non-reduced word collapses to its canonical form.
    auto w = weyl_from_word(rs, {1, 1, 2});
    CHECK(w.word == std::vector<int>{2});
}
