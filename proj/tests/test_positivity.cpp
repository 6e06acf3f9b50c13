#include "schurpos/positivity.hpp"

#include "schurpos/characters.hpp"
#include "schurpos/plethysm.hpp"
#include "schurpos/quotient.hpp"
#include "schurpos/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace schurpos;

TEST_CASE("lr_bound examples") {
    const std::vector<Partition> ex{Partition{3, 2}, Partition{1, 1}, Partition{1, 1}};
    CHECK(lr_bound(ex) == Partition{5, 4, 2, 2, 1, 1});

    const std::vector<Partition> boxes{Partition{1}, Partition{1}};
    CHECK(lr_bound(boxes) == Partition{2, 1});

    for (std::int64_t n = 0; n <= 8; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            const std::vector<Partition> single{lambda};
            REQUIRE(lr_bound(single) == lambda);
        }
    }
    CHECK_THROWS_AS(lr_bound(std::vector<Partition>{}), std::invalid_argument);
}

TEST_CASE("sxp lower check") {
    CHECK(sxp_lower_check(Partition{3, 2}, Partition{6, 4}));
    CHECK_FALSE(sxp_lower_check(Partition{3, 2}, Partition{10}));
    CHECK(sxp_lower_check(Partition{}, Partition{4, 1}));
}

TEST_CASE("sxp upper bound") {
    const auto naive = sxp_upper_bound(2, Partition{3, 2}, false);
    CHECK(naive.xi1 == Partition{10, 5, 3, 2, 2, 1, 1, 1, 1, 1});

    const auto refined = sxp_upper_bound(2, Partition{3, 2});
    CHECK(refined.xi1 == Partition{8, 5, 3, 2, 2, 1, 1, 1, 1, 1});
    CHECK(refined.xi2 == Partition{10, 5, 3, 2, 1, 1, 1});
    CHECK(refined.intersection == Partition{8, 5, 3, 2, 1, 1, 1});

    for (std::int64_t size = 1; size <= 7; ++size) {
        for (const auto& lambda : partitions_of(size)) {
            for (std::int64_t n = 1; n <= 3; ++n) {
                const auto b = sxp_upper_bound(n, lambda);
                REQUIRE(contains(b.xi1, b.intersection));
                REQUIRE(contains(b.xi2, b.intersection));
                if (n == 1) REQUIRE(contains(b.intersection, lambda));
            }
        }
    }
    CHECK_THROWS_AS(sxp_upper_bound(0, Partition{1}), std::invalid_argument);
}

TEST_CASE("plethysm filter") {
    const Partition nu{4, 2, 2};
    const auto shapes = partitions_of(16);
    CHECK(shapes.size() == 231);
    CHECK(std::count_if(shapes.begin(), shapes.end(), [&](const Partition& l) { return plethysm_filter_check(nu, l); }) ==
          142);
    CHECK(plethysm_filter_check(nu, nu));
    CHECK_FALSE(plethysm_filter_check(nu, Partition{16}));
}

TEST_CASE("trivial and sign multiplicities") {
    CHECK(trivial_sign_multiplicity(Partition{3}, Partition{2}) == TrivialSignMultiplicity{1, 0});
    CHECK(trivial_sign_multiplicity(Partition{1, 1}, Partition{1, 1, 1}) == TrivialSignMultiplicity{0, 1});
    CHECK(trivial_sign_multiplicity(Partition{1, 1}, Partition{1, 1}) == TrivialSignMultiplicity{0, 0});
    CHECK(trivial_sign_multiplicity(Partition{1}, Partition{1}) == TrivialSignMultiplicity{1, 1});
    CHECK(trivial_sign_multiplicity(Partition{1}, Partition{1, 1}) == TrivialSignMultiplicity{0, 1});
    CHECK(trivial_sign_multiplicity(Partition{1, 1}, Partition{2}) == TrivialSignMultiplicity{0, 0});
    CHECK(trivial_sign_multiplicity(Partition{2}, Partition{1, 1}) == TrivialSignMultiplicity{0, 1});
    CHECK(trivial_sign_multiplicity(Partition{3}, Partition{1, 1, 1}) == TrivialSignMultiplicity{0, 0});
}

TEST_CASE("candidates") {
    const auto candidates = enumerate_candidates(2, Partition{3, 2});
    CHECK(candidates.size() == 22);
    CHECK(std::is_sorted(candidates.begin(), candidates.end(), std::greater<>()));
    for (const auto& mu : sxp_plethysm(2, Partition{3, 2}).support()) {
        CHECK(std::find(candidates.begin(), candidates.end(), mu) != candidates.end());
    }
    for (const auto& mu : candidates) {
        CHECK(core_of(mu, 2).empty());
        CHECK(contains(mu, Partition{3, 2}));
    }
    for (std::int64_t n = 0; n <= 6; ++n) {
        for (const auto& lambda : partitions_of(n)) REQUIRE(enumerate_candidates(1, lambda) == std::vector<Partition>{lambda});
    }
}

TEST_CASE("partitions inside a box") {
    CHECK(partitions_inside(3, Partition{2, 2}) == std::vector<Partition>{Partition{2, 1}});
    CHECK(partitions_inside(0, Partition{}) == std::vector<Partition>{Partition{}});
    CHECK(partitions_inside(5, Partition{16}).size() == 1);
    for (std::int64_t n = 0; n <= 9; ++n) {
        CHECK(partitions_inside(n, Partition(std::vector<Partition::Part>(9, 9))).size() ==
              static_cast<std::size_t>(partition_count(n)));
    }
}

TEST_CASE("soundness sweeps at small degree") {
    CharacterCache cache;
    for (const auto& report : {verify::lr_bound_soundness(7), verify::sxp_bounds_soundness(3, 3, 9),
                               verify::plethysm_filter_soundness(8, cache)}) {
        INFO(report.name << ": " << report.counterexample.value_or(""));
        CHECK(report.passed());
        CHECK(report.checked > 0);
    }
}
