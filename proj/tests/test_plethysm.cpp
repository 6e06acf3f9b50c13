#include "schurpos/plethysm.hpp"

#include "schurpos/quotient.hpp"

#include <doctest.h>

using namespace schurpos;

namespace {

SchurExpansion expansion(std::int64_t degree, std::initializer_list<std::pair<Partition, int>> terms) {
    SchurExpansion f(degree);
    for (const auto& [p, c] : terms) f.add(p, c);
    return f;
}

}  // namespace

TEST_CASE("Schur to power sums and back") {
    const auto e2 = schur_to_power(Partition{1, 1});
    CHECK(e2.size() == 2);
    CHECK(e2.coeff(Partition{1, 1}) == Rational(1, 2));
    CHECK(e2.coeff(Partition{2}) == Rational(-1, 2));

    for (std::int64_t n = 0; n <= 7; ++n) {
        for (const auto& mu : partitions_of(n)) REQUIRE(power_to_schur(schur_to_power(mu)) == SchurExpansion::basis(mu));
    }

    PowerSumExpansion p2(2);
    p2.add(Partition{2}, 1);
    CHECK(power_to_schur(p2) == expansion(2, {{Partition{2}, 1}, {Partition{1, 1}, -1}}));

    PowerSumExpansion half(2);
    half.add(Partition{2}, Rational(1, 2));
    CHECK_THROWS_AS(power_to_schur(half), NonIntegralResult);
}

TEST_CASE("p_2 o s_(3,2) term by term") {
    const auto expected = expansion(10, {{Partition{3, 3, 2, 2}, -1},
                                         {Partition{3, 3, 3, 1}, 1},
                                         {Partition{4, 2, 2, 2}, 1},
                                         {Partition{4, 3, 3}, -1},
                                         {Partition{4, 4, 1, 1}, -1},
                                         {Partition{4, 4, 2}, 1},
                                         {Partition{5, 2, 2, 1}, -1},
                                         {Partition{5, 3, 1, 1}, 1},
                                         {Partition{5, 5}, -1},
                                         {Partition{6, 2, 2}, 1},
                                         {Partition{6, 3, 1}, -1},
                                         {Partition{6, 4}, 1}});
    CHECK(sxp_plethysm(2, Partition{3, 2}) == expected);

    PlethysmOptions pruned;
    pruned.prune = true;
    CHECK(sxp_plethysm(2, Partition{3, 2}, pruned) == expected);

    PlethysmOptions threaded;
    threaded.threads = 4;
    CHECK(sxp_plethysm(2, Partition{3, 2}, threaded) == expected);
}

TEST_CASE("p_1 is the identity and small cases") {
    for (const auto& lambda : partitions_of(5)) CHECK(sxp_plethysm(1, lambda) == SchurExpansion::basis(lambda));
    CHECK(sxp_plethysm(2, Partition{1}) == expansion(2, {{Partition{2}, 1}, {Partition{1, 1}, -1}}));
    CHECK(sxp_plethysm(3, Partition{}) == SchurExpansion::basis(Partition{}));
    CHECK_THROWS_AS(sxp_plethysm(0, Partition{1}), std::invalid_argument);
}

TEST_CASE("extreme terms of p_n o s_lambda") {
    const Partition lambda{2, 1};
    const auto f = sxp_plethysm(3, lambda);
    CHECK(f.coeff(scale(lambda, 3)) == 1);
    CHECK(f.coeff(repeat_union(lambda, 3)) == ((lambda.size() * 2) % 2 == 0 ? 1 : -1));
    for (const auto& [mu, c] : f) REQUIRE(core_of(mu, 3).empty());
}

TEST_CASE("schur_plethysm examples") {
    for (const auto& nu : partitions_of(4)) CHECK(schur_plethysm(Partition{1}, nu) == SchurExpansion::basis(nu));
    CHECK(schur_plethysm(Partition{1, 1}, Partition{2}) == SchurExpansion::basis(Partition{3, 1}));
    CHECK(schur_plethysm(Partition{2}, Partition{2}) == expansion(4, {{Partition{4}, 1}, {Partition{2, 2}, 1}}));
    CHECK(schur_plethysm(Partition{}, Partition{3}) == SchurExpansion::basis(Partition{}));
    CHECK(schur_plethysm(Partition{2}, Partition{}) == SchurExpansion::basis(Partition{}));
    CHECK(schur_plethysm(Partition{1, 1}, Partition{}).is_zero());

    const auto big = schur_plethysm(Partition{1, 1}, Partition{4, 2, 2});
    CHECK(big.degree() == 16);
    CHECK(big.size() == 40);
    for (const auto& [lambda, c] : big) CHECK(c > 0);
}

TEST_CASE("schur_plethysm is independent of options") {
    const auto plain = schur_plethysm(Partition{2, 1}, Partition{2});
    PlethysmOptions options;
    options.prune = true;
    options.threads = 3;
    CharacterCache cache;
    options.cache = &cache;
    CHECK(schur_plethysm(Partition{2, 1}, Partition{2}, options) == plain);
    CHECK(cache.size() > 0);
}

TEST_CASE("multipartitions") {
    CHECK(multipartitions(1, 3).size() == 3);
    CHECK(multipartitions(2, 0).size() == 1);
    // Bipartitions of 2: (2|), (11|), (1|1), (|2), (|11).
    CHECK(multipartitions(2, 2).size() == 5);
    CHECK(multipartitions(3, 2).size() == 9);
}
