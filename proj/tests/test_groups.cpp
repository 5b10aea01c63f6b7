#include <doctest.h>

#include <map>

#include "qk/groups.hpp"

using namespace qk;

TEST_CASE("group order formulas") {
    CHECK(group_order(GroupSpec::parse("SL:2:2")) == 6);
    CHECK(group_order(GroupSpec::parse("SL:2:3")) == 24);
    CHECK(group_order(GroupSpec::parse("SL:3:2")) == 168);
    CHECK(group_order(GroupSpec::parse("SU:3:2")) == 216);
    CHECK(group_order(GroupSpec::parse("Sp:1:3")) == 24);   // Sp_2(3) = SL_2(3)
    CHECK(group_order(GroupSpec::parse("Sp:2:3")) == 51840);  // Sp_4(3)
    CHECK(group_order(GroupSpec::parse("SO:odd:1:3")) == 24);
    CHECK(group_order(GroupSpec::parse("SO:+:2:3")) == 576);
    CHECK(group_order(GroupSpec::parse("SO:-:2:3")) == 720);
}

TEST_CASE("spec parsing and printing") {
    GroupSpec s = GroupSpec::parse("SO:-:4:5");
    CHECK(s.family == Family::SOminus);
    CHECK(s.d == 8);
    CHECK(s.alpha == 2);
    CHECK(s.to_string() == "SO:-:4:5");
    CHECK(GroupSpec::parse("SU:3:2").delta == 2);
    CHECK(GroupSpec::parse("SU:3:2").field->q() == 4);
    CHECK_THROWS_AS(GroupSpec::parse("GL:3:2"), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec::parse("SL:3:6"), std::invalid_argument);
    // orthogonal families need odd q
    CHECK_THROWS_AS(GroupSpec::parse("SO:odd:2:2"), std::invalid_argument);
}

TEST_CASE("samples are members across all families") {
    for (const char* name : {"SL:4:3", "SU:3:2", "SU:4:3", "Sp:2:3", "Sp:3:2",
                             "SO:odd:2:3", "SO:+:2:3", "SO:-:2:3"}) {
        GroupSpec s = GroupSpec::parse(name);
        Rng rng(1234);
        for (int it = 0; it < 2000; ++it) {
            MatF g = sample_uniform(s, rng);
            REQUIRE_MESSAGE(is_member(s, g), name);
        }
    }
}

TEST_CASE("enumerate matches order formulas") {
    Rng rng(5);
    CHECK(enumerate_group(GroupSpec::parse("SL:2:2"), 1000, rng).size() == 6);
    CHECK(enumerate_group(GroupSpec::parse("SL:2:3"), 1000, rng).size() == 24);
    CHECK(enumerate_group(GroupSpec::parse("SL:3:2"), 1000, rng).size() == 168);
    CHECK(enumerate_group(GroupSpec::parse("SO:odd:1:3"), 1000, rng).size() == 24);
    CHECK_THROWS_AS(enumerate_group(GroupSpec::parse("Sp:2:3"), 1000, rng),
                    std::length_error);
}

TEST_CASE("sampler hits every element of SL_2(3) with uniform frequency") {
    GroupSpec s = GroupSpec::parse("SL:2:3");
    Rng erng(77);
    std::vector<MatF> all = enumerate_group(s, 1000, erng);
    std::map<std::vector<Fel>, unsigned> counts;
    for (const auto& m : all) counts[m.a] = 0;
    Rng rng(99);
    for (int it = 0; it < 24000; ++it) {
        MatF g = sample_uniform(s, rng);
        auto it2 = counts.find(g.a);
        REQUIRE(it2 != counts.end());
        ++it2->second;
    }
    for (const auto& [key, c] : counts) {
        CHECK(c >= 800);
        CHECK(c <= 1200);
    }
}

TEST_CASE("order-5 proportion in Sp_4(3): Monte Carlo matches enumeration") {
    GroupSpec s = GroupSpec::parse("Sp:2:3");
    Rng erng(3);
    std::vector<MatF> all = enumerate_group(s, 100000, erng);
    REQUIRE(all.size() == 51840);
    const MatF id = MatF::identity(s.field, s.d);
    unsigned long exact_hits = 0;
    for (const auto& g : all)
        if (!(g == id) && mat_pow(g, 5) == id) ++exact_hits;
    const double exact = double(exact_hits) / double(all.size());

    Rng rng(2024);
    unsigned long mc_hits = 0;
    const int N = 100000;
    for (int it = 0; it < N; ++it) {
        MatF g = sample_uniform(s, rng);
        if (!(g == id) && mat_pow(g, 5) == id) ++mc_hits;
    }
    const double mc = double(mc_hits) / N;
    CHECK(std::abs(mc - exact) < 0.01);
}
