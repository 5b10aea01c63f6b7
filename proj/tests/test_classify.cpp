#include <doctest.h>

#include "qk/classify.hpp"

using namespace qk;

namespace {

MatF block_of_companions(const FieldPtr& F,
                         const std::vector<std::vector<Fel>>& coeff_lists) {
    std::vector<MatF> blocks;
    for (const auto& c : coeff_lists) blocks.push_back(MatF::companion(Poly(F, c)));
    return MatF::block_diag(blocks);
}

// degrees 2, 3 and a primitive degree-6 factor: companions of
// x^2+x+1, x^3+x+1, x^6+x+1 over F_2 (total dimension 11, det 1).
MatF witness_sl11() {
    auto F = FieldSpec::make(2, 1);
    return block_of_companions(
        F, {{1, 1, 1}, {1, 1, 0, 1}, {1, 1, 0, 0, 0, 0, 1}});
}

}  // namespace

TEST_CASE("identity classifies as none for every k") {
    GroupSpec s = GroupSpec::parse("SL:5:2");
    CharPolyProfile prof = profile(s, MatF::identity(s.field, 5));
    for (unsigned k = 2; k <= 5; ++k) CHECK(classify_k(s, prof, k) == Tier::none);
}

TEST_CASE("SL_5(2) block element reaches the full tier at k = 3") {
    GroupSpec s = GroupSpec::parse("SL:5:2");
    auto F = s.field;
    // companion blocks of x^3+x+1 (order 7) and x^2+x+1 (order 3)
    MatF g = block_of_companions(F, {{1, 1, 0, 1}, {1, 1, 1}});
    Classification c = classify_element(s, g, 3);
    CHECK(c.tier == Tier::full);
    CHECK(c.ppd_set == std::vector<BigNat>{7});
    CHECK(c.B == 3);
    CHECK(c.beta == 0);
    CHECK(c.witness.one_eigenspace_dim == 2);
    CHECK(c.witness.complement_dim == 3);
    CHECK(c.witness.irreducible);
    CHECK(c.witness.eigenspace_ok);
}

TEST_CASE("dimension-11 worked example over F_2: B = 21 and a reducible power") {
    GroupSpec s = GroupSpec::parse("SL:11:2");
    MatF g = witness_sl11();
    CharPolyProfile prof = profile(s, g);
    REQUIRE(prof.factors.size() == 3);

    CHECK(classify_k(s, prof, 6) == Tier::qk);
    auto [B, beta] = compute_B(s, prof, 6);
    CHECK(B == 21);
    CHECK(beta == 0);

    Classification c = classify_element(s, g, 6);
    CHECK(c.tier == Tier::qk);  // no primitive prime divisor of 2^6 - 1 exists
    CHECK(c.ppd_set.empty());
    CHECK(c.witness.one_eigenspace_dim == 5);
    CHECK(c.witness.complement_dim == 6);
    CHECK_FALSE(c.witness.irreducible);
    CHECK(c.witness.eigenspace_ok);
}

TEST_CASE("element_r_part extracts prime parts of the order") {
    // the witness has order lcm(3, 7, 63) = 63
    GroupSpec s = GroupSpec::parse("SL:11:2");
    MatF g = witness_sl11();
    CharPolyProfile prof = profile(s, g);
    BigNat E = annihilating_exponent(s, prof);
    CHECK(mat_pow(g, E) == MatF::identity(s.field, 11));
    CHECK(element_r_part(g, E, 3) == 9);
    CHECK(element_r_part(g, E, 7) == 7);
    CHECK(element_r_part(g, E, 5) == 1);
}

TEST_CASE("order-5 symplectic element is Q_2 with a trivial eigenspace") {
    GroupSpec s = GroupSpec::parse("Sp:2:3");
    auto F = s.field;
    // x^4+x^3+x^2+x+1 is self-conjugate (palindromic) and irreducible over F_3
    Poly f(F, {1, 1, 1, 1, 1});
    REQUIRE(is_irreducible(f));
    REQUIRE(is_self_conjugate(f));
    Rng rng(8);
    // find an order-5 element by sampling (proportion is a few percent)
    const MatF id = MatF::identity(F, 4);
    for (;;) {
        MatF g = sample_uniform(s, rng);
        if (g == id || !(mat_pow(g, 5) == id)) continue;
        Classification c = classify_element(s, g, 2);
        CHECK(c.tier >= Tier::qk);
        CHECK(c.witness.one_eigenspace_dim == 0);
        CHECK(c.witness.complement_dim == 4);
        CHECK(c.witness.eigenspace_ok);
        break;
    }
}

TEST_CASE("unitary classification requires odd k") {
    GroupSpec s = GroupSpec::parse("SU:4:3");
    Rng rng(15);
    for (int it = 0; it < 200; ++it) {
        MatF g = sample_uniform(s, rng);
        CharPolyProfile prof = profile(s, g);
        CHECK(classify_k(s, prof, 2) == Tier::none);
        CHECK(classify_k(s, prof, 4) == Tier::none);
    }
}

TEST_CASE("good-k search picks the smallest odd k in the window") {
    auto F = FieldSpec::make(2, 1);

    GroupSpec s16 = GroupSpec::parse("SL:16:2");
    // degrees 5 and 11; window is (log 16, 2 log 16] = (2.77, 5.54]
    MatF g = block_of_companions(
        F, {{1, 0, 1, 0, 0, 1}, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}});
    REQUIRE(is_irreducible(Poly(F, {1, 0, 1, 0, 0, 1})));
    REQUIRE(is_irreducible(Poly(F, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1})));
    CHECK(find_good_k(s16, profile(s16, g)) == 5u);

    GroupSpec s8 = GroupSpec::parse("SL:8:2");
    MatF h = block_of_companions(F, {{1, 1, 0, 1}, {1, 0, 1, 0, 0, 1}});
    CHECK(find_good_k(s8, profile(s8, h)) == 3u);

    CHECK_FALSE(
        find_good_k(s8, profile(s8, MatF::identity(F, 8))).has_value());
}

TEST_CASE("classification is invariant under conjugation") {
    GroupSpec s = GroupSpec::parse("SL:6:3");
    Rng rng(123);
    for (int it = 0; it < 60; ++it) {
        MatF g = sample_uniform(s, rng);
        MatF h = sample_uniform(s, rng);
        MatF conj = mat_mul(mat_mul(h, g), *mat_inverse(h));
        Classification a = classify_element(s, g, 3);
        Classification b = classify_element(s, conj, 3);
        CHECK(a.tier == b.tier);
        CHECK(a.B == b.B);
        CHECK(a.beta == b.beta);
    }
}

TEST_CASE("annihilating exponent annihilates across families") {
    for (const char* name : {"SL:4:3", "Sp:2:3", "SO:odd:2:3", "SU:3:2"}) {
        GroupSpec s = GroupSpec::parse(name);
        Rng rng(31);
        for (int it = 0; it < 50; ++it) {
            MatF g = sample_uniform(s, rng);
            BigNat E = annihilating_exponent(s, profile(s, g));
            CHECK(mat_pow(g, E) == MatF::identity(s.field, s.d));
        }
    }
}

TEST_CASE("tier ordering is nested") {
    CHECK(Tier::full >= Tier::ppd);
    CHECK(Tier::ppd >= Tier::qk);
    CHECK(Tier::none < Tier::qk);
}

TEST_CASE("json serialization of a classification") {
    GroupSpec s = GroupSpec::parse("SL:11:2");
    Classification c = classify_element(s, witness_sl11(), 6);
    std::string j = classification_to_json(c);
    CHECK(j.find("\"B\":\"21\"") != std::string::npos);
    CHECK(j.find("\"tier\":\"qk\"") != std::string::npos);
}
