#include "schurpos/littlewood_richardson.hpp"

#include "schurpos/positivity.hpp"

#include <doctest.h>

using namespace schurpos;

namespace {

std::vector<Partition> up_to(std::int64_t n, std::int64_t from = 0) {
    std::vector<Partition> out;
    for (std::int64_t k = from; k <= n; ++k) {
        for (auto& p : partitions_of(k)) out.push_back(std::move(p));
    }
    return out;
}

SchurExpansion s(const Partition& p) { return SchurExpansion::basis(p); }

}  // namespace

TEST_CASE("lr_coefficient examples") {
    const Partition mu{3, 2}, nu{1, 1};
    CHECK(lr_coefficient(sum(mu, nu), mu, nu) == 1);
    CHECK(lr_coefficient(union_of(mu, nu), mu, nu) == 1);
    CHECK(lr_coefficient(Partition{2, 1}, Partition{1}, Partition{1, 1}) == 1);
    CHECK(lr_coefficient(Partition{2}, Partition{1, 1}, Partition{}) == 0);
    CHECK(lr_coefficient(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
    CHECK(lr_coefficient(Partition{4, 2}, Partition{2, 1}, Partition{3}) == 1);
    CHECK(lr_coefficient(Partition{4, 2}, Partition{2, 1}, Partition{2, 2}) == 0);
}

TEST_CASE("Pieri products") {
    CHECK(schur_product(s(Partition{1}), s(Partition{1})) == [] {
        SchurExpansion f(2);
        f.add(Partition{2}, 1);
        f.add(Partition{1, 1}, 1);
        return f;
    }());
    // s_(2,1) * s_(1) = s_(3,1) + s_(2,2) + s_(2,1,1).
    const auto f = lr_product(Partition{2, 1}, Partition{1});
    CHECK(f.size() == 3);
    CHECK(f.coeff(Partition{3, 1}) == 1);
    CHECK(f.coeff(Partition{2, 2}) == 1);
    CHECK(f.coeff(Partition{2, 1, 1}) == 1);
}

TEST_CASE("product with the unit") {
    const auto f = lr_product(Partition{3, 1}, Partition{2});
    CHECK(schur_product(f, s(Partition{})) == f);
    CHECK(schur_product(s(Partition{}), f) == f);
    CHECK(lr_product(Partition{}, Partition{3, 2}) == s(Partition{3, 2}));
}

TEST_CASE("triple product stays inside the outer-corner region") {
    const auto f = schur_product(schur_product(s(Partition{3, 2}), s(Partition{1, 1})), s(Partition{1, 1}));
    CHECK(f.degree() == 9);
    for (const auto& [lambda, c] : f) REQUIRE(contains(Partition{5, 4, 2, 2, 1, 1}, lambda));
}

TEST_CASE("coefficient agrees with product and is symmetric") {
    for (std::int64_t total = 0; total <= 10; ++total) {
        for (std::int64_t a = 0; a <= total; ++a) {
            for (const auto& mu : partitions_of(a)) {
                for (const auto& nu : partitions_of(total - a)) {
                    const auto product = lr_product(mu, nu);
                    for (const auto& lambda : partitions_of(total)) {
                        const auto c = lr_coefficient(lambda, mu, nu);
                        REQUIRE(c == product.coeff(lambda));
                        REQUIRE(c == lr_coefficient(lambda, nu, mu));
                    }
                }
            }
        }
    }
}

TEST_CASE("support lies between union and sum in dominance order") {
    const auto all = up_to(10);
    for (const auto& mu : all) {
        for (const auto& nu : all) {
            if (mu.size() + nu.size() > 10) continue;
            const auto product = lr_product(mu, nu);
            for (const auto& [lambda, c] : product) {
                REQUIRE(dominates(sum(mu, nu), lambda));
                REQUIRE(dominates(lambda, union_of(mu, nu)));
            }
            REQUIRE(product.coeff(sum(mu, nu)) == 1);
            REQUIRE(product.coeff(union_of(mu, nu)) == 1);
        }
    }
}

TEST_CASE("bounded product keeps exactly the contained terms") {
    const Partition bound{4, 3, 1};
    const auto full = lr_product(Partition{2, 1}, Partition{2, 1, 1});
    const auto bounded = lr_product(Partition{2, 1}, Partition{2, 1, 1}, bound);
    for (const auto& [lambda, c] : full) CHECK(bounded.coeff(lambda) == (contains(bound, lambda) ? c : Integer(0)));
    for (const auto& [lambda, c] : bounded) CHECK(contains(bound, lambda));
}

TEST_CASE("generalized coefficient, with and without pruning") {
    const std::vector<Partition> factors{Partition{3, 2}, Partition{1, 1}, Partition{1, 1}};
    const auto f = schur_product(schur_product(s(factors[0]), s(factors[1])), s(factors[2]));
    for (const auto& lambda : partitions_of(9)) {
        REQUIRE(generalized_lr_coefficient(lambda, factors) == f.coeff(lambda));
        REQUIRE(generalized_lr_coefficient(lambda, factors, true) == f.coeff(lambda));
    }
    CHECK(generalized_lr_coefficient(Partition{}, std::vector<Partition>{Partition{}, Partition{}}) == 1);
    CHECK(generalized_lr_coefficient(Partition{2}, std::vector<Partition>{Partition{1}}) == 0);
    CHECK(generalized_lr_coefficient(Partition{2, 1}, std::vector<Partition>{Partition{2, 1}}) == 1);

    const std::vector<Partition> four{Partition{2}, Partition{1, 1}, Partition{2, 1}, Partition{1}};
    SchurExpansion g = s(Partition{});
    for (const auto& p : four) g = schur_product(g, s(p));
    for (const auto& lambda : partitions_of(8)) {
        REQUIRE(generalized_lr_coefficient(lambda, four, true) == g.coeff(lambda));
    }
}
