#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "abelcd/algebra.hpp"
#include "abelcd/counting.hpp"
#include "abelcd/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace abelcd;

namespace {

GroupAlgebra gf2_algebra(std::vector<std::int64_t> factors) {
    return build_algebra(AbelianGroup{std::move(factors)}, build_field(2, 1));
}

std::multiset<int> dims_of(const std::vector<IdealCode>& ideals) {
    std::multiset<int> d;
    for (const auto& code : ideals) d.insert(code.dim);
    return d;
}

} // namespace

TEST_CASE("algebra construction and convolution") {
    const GroupAlgebra alg = gf2_algebra({2});
    // (1 + Y)^2 = 0 in characteristic 2
    const std::vector<Elem> one_plus_y{1, 1};
    CHECK(alg.multiply(one_plus_y, one_plus_y) == alg.zero());

    const GroupAlgebra z6 = gf2_algebra({6});
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            CHECK(z6.multiply(z6.unit(a), z6.unit(b)) == z6.unit((a + b) % 6));

    // (Y - 1)^4 = 0 and (Y - 1)^3 != 0 in GF(2)[Z_4]
    const GroupAlgebra z4 = gf2_algebra({4});
    const std::vector<Elem> y_minus_1{1, 1, 0, 0};
    std::vector<Elem> acc{1, 0, 0, 0};
    for (int i = 0; i < 3; ++i) acc = z4.multiply(acc, y_minus_1);
    CHECK(acc != z4.zero());
    acc = z4.multiply(acc, y_minus_1);
    CHECK(acc == z4.zero());

    CHECK_THROWS_AS(build_algebra(AbelianGroup{{25}}, build_field(2, 1)), capacity_error);
}

TEST_CASE("augmentation ideal") {
    const GroupAlgebra z2 = gf2_algebra({2});
    const IdealCode aug = augmentation_ideal(z2);
    CHECK(aug.dim == 1);
    CHECK(aug.basis.at(0, 0) == 1);
    CHECK(aug.basis.at(0, 1) == 1);

    CHECK(augmentation_ideal(build_algebra(AbelianGroup{}, build_field(2, 1))).dim == 0);

    // equals the unique maximal ideal of GF(2)[Z_4]
    const GroupAlgebra z4 = gf2_algebra({4});
    const auto ideals = enumerate_ideals(z4);
    const IdealCode aug4 = augmentation_ideal(z4);
    CHECK(aug4.dim == 3);
    std::size_t dim3 = 0;
    for (const auto& code : ideals) dim3 += code.dim == 3;
    CHECK(dim3 == 1);
    CHECK(std::find(ideals.begin(), ideals.end(), aug4) != ideals.end());
}

TEST_CASE("ideal generation") {
    const GroupAlgebra z4 = gf2_algebra({4});
    CHECK(ideal_generated_by(z4, z4.zero()).dim == 0);
    CHECK(ideal_generated_by(z4, z4.unit(0)).dim == 4);

    // (Y - 1)^2 generates the dimension-2 rung of the chain
    const std::vector<Elem> sq = z4.multiply({1, 1, 0, 0}, {1, 1, 0, 0});
    CHECK(ideal_generated_by(z4, sq).dim == 2);
}

TEST_CASE("ideal enumeration on chain rings") {
    const GroupAlgebra z4 = gf2_algebra({4});
    const auto ideals = enumerate_ideals(z4);
    REQUIRE(ideals.size() == 5);
    CHECK(dims_of(ideals) == std::multiset<int>{0, 1, 2, 3, 4});
    // chain: each contained in the next
    for (std::size_t i = 1; i < ideals.size(); ++i)
        CHECK(stacked_rank(z4.field, ideals[i].basis, ideals[i - 1].basis) == ideals[i].dim);

    CHECK(enumerate_ideals(gf2_algebra({3})).size() == 4);
    CHECK(enumerate_ideals(build_algebra(AbelianGroup{}, build_field(2, 1))).size() == 2);

    // published chain-ring count: p^k + 1 ideals, nilpotency index p^k
    for (auto [p, k] : {std::pair<std::int64_t, int>{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}}) {
        std::int64_t pk = 1;
        for (int i = 0; i < k; ++i) pk *= p;
        const GroupAlgebra alg = build_algebra(AbelianGroup{{pk}}, build_field(p, 1));
        const auto chain = enumerate_ideals(alg);
        CHECK(static_cast<std::int64_t>(chain.size()) == chain_ring_ideal_count(p, k));
        for (std::size_t i = 1; i < chain.size(); ++i)
            CHECK(stacked_rank(alg.field, chain[i].basis, chain[i - 1].basis) == chain[i].dim);
        CHECK(nilpotency_index(alg) == pk);
    }
}

TEST_CASE("enumeration finds non-cyclic ideals") {
    // GF(2)[Z_2 x Z_2] has 7 ideals; the augmentation ideal is a sum of
    // two cyclic ideals but not cyclic itself.
    const GroupAlgebra alg = gf2_algebra({2, 2});
    const auto ideals = enumerate_ideals(alg);
    CHECK(ideals.size() == 7);
    CHECK(dims_of(ideals) == std::multiset<int>{0, 1, 2, 2, 2, 3, 4});
}

TEST_CASE("ideal lattice sanity") {
    // every enumerated ideal is closed under the generator shifts and the
    // set is closed under sums and intersections
    for (const auto& alg : {gf2_algebra({6}), gf2_algebra({4, 2}), gf2_algebra({2, 2}),
                            build_algebra(AbelianGroup{{5}}, build_field(2, 2)),
                            build_algebra(AbelianGroup{{3, 3}}, build_field(2, 1))}) {
        const auto ideals = enumerate_ideals(alg);
        const std::set<IdealCode> lattice(ideals.begin(), ideals.end());
        for (const auto& code : ideals) CHECK(is_ideal(alg, code.basis));
        for (const auto& a : ideals)
            for (const auto& b : ideals) {
                const IdealCode sum{row_space_basis(alg.field, vstack(a.basis, b.basis)),
                                    stacked_rank(alg.field, a.basis, b.basis)};
                CHECK(lattice.count(sum) == 1);
                // intersection through the annihilator identity
                // (A cap B)-perp = A-perp + B-perp
                const GFMatrix da = null_space(alg.field, a.basis);
                const GFMatrix db = null_space(alg.field, b.basis);
                const IdealCode inter = [&] {
                    GFMatrix basis =
                        row_space_basis(alg.field, null_space(alg.field, vstack(da, db)));
                    const int dim = basis.rows;
                    return IdealCode{std::move(basis), dim};
                }();
                CHECK(inter.dim == a.dim + b.dim - sum.dim);
                CHECK(lattice.count(inter) == 1);
            }
    }
}

TEST_CASE("minimal ideals in the semisimple case") {
    const auto z7 = minimal_ideals(gf2_algebra({7}));
    CHECK(dims_of(z7) == std::multiset<int>{1, 3, 3});

    const auto z3 = minimal_ideals(gf2_algebra({3}));
    CHECK(dims_of(z3) == std::multiset<int>{1, 2});

    const auto f4z3 = minimal_ideals(build_algebra(AbelianGroup{{3}}, build_field(2, 2)));
    CHECK(dims_of(f4z3) == std::multiset<int>{1, 1, 1});

    CHECK_THROWS_AS(minimal_ideals(gf2_algebra({4})), domain_error);
}

TEST_CASE("duals") {
    const GroupAlgebra z2 = gf2_algebra({2});
    const auto ideals = enumerate_ideals(z2);

    CHECK(dual_code(z2, whole_algebra(z2), Variant::euclidean, 1) == zero_ideal(z2));
    CHECK(dual_code(z2, zero_ideal(z2), Variant::euclidean, 1) == whole_algebra(z2));

    // span{1 + Y} is self-dual
    const IdealCode aug = augmentation_ideal(z2);
    CHECK(dual_code(z2, aug, Variant::euclidean, 1) == aug);

    // duality is an involution on every enumerated ideal
    for (const auto& alg :
         {gf2_algebra({3}), gf2_algebra({7}), gf2_algebra({6}), gf2_algebra({4, 2})}) {
        for (const IdealCode& code : enumerate_ideals(alg)) {
            const IdealCode dual = dual_code(alg, code, Variant::euclidean, 1);
            CHECK(dual.dim == alg.dim - code.dim);
            CHECK(dual_code(alg, dual, Variant::euclidean, 1) == code);
        }
    }

    // Hermitian duals need the quadratic extension
    const GroupAlgebra f4z3 = build_algebra(AbelianGroup{{3}}, build_field(2, 2));
    for (const IdealCode& code : enumerate_ideals(f4z3)) {
        const IdealCode dual = dual_code(f4z3, code, Variant::hermitian, 1);
        CHECK(dual_code(f4z3, dual, Variant::hermitian, 1) == code);
    }
    CHECK_THROWS_AS(dual_code(gf2_algebra({3}), zero_ideal(gf2_algebra({3})),
                              Variant::hermitian, 1),
                    domain_error);
}

TEST_CASE("lcd detection") {
    const GroupAlgebra z2 = gf2_algebra({2});
    CHECK(is_lcd(z2, whole_algebra(z2), Variant::euclidean, 1));
    CHECK(is_lcd(z2, zero_ideal(z2), Variant::euclidean, 1));
    CHECK_FALSE(is_lcd(z2, augmentation_ideal(z2), Variant::euclidean, 1));

    const GroupAlgebra z7 = gf2_algebra({7});
    const auto ideals = enumerate_ideals(z7);
    CHECK(ideals.size() == 8);
    std::int64_t lcd_total = 0;
    for (const auto& code : ideals) lcd_total += is_lcd(z7, code, Variant::euclidean, 1);
    CHECK(lcd_total == 4);
}

TEST_CASE("direct summands") {
    const GroupAlgebra z2 = gf2_algebra({2});
    const auto ideals2 = enumerate_ideals(z2);
    CHECK(is_direct_summand(z2, zero_ideal(z2), ideals2));
    CHECK(is_direct_summand(z2, whole_algebra(z2), ideals2));
    CHECK_FALSE(is_direct_summand(z2, augmentation_ideal(z2), ideals2));

    // all ideals of a semisimple algebra are summands
    const GroupAlgebra z3 = gf2_algebra({3});
    const auto ideals3 = enumerate_ideals(z3);
    for (const auto& code : ideals3) CHECK(is_direct_summand(z3, code, ideals3));
}

TEST_CASE("nilpotency preconditions") {
    CHECK(nilpotency_index(gf2_algebra({2})) == 2);
    CHECK(nilpotency_index(gf2_algebra({4})) == 4);
    CHECK(nilpotency_index(build_algebra(AbelianGroup{{3}}, build_field(3, 1))) == 3);
    CHECK_THROWS_AS(nilpotency_index(gf2_algebra({3})), domain_error);
    CHECK_THROWS_AS(nilpotency_index(gf2_algebra({2, 2})), domain_error);
}

TEST_CASE("triviality theorems by exhaustion over p-groups") {
    // Over matching characteristic, a p-group algebra has only the two
    // trivial complementary dual ideals and only the two trivial summands.
    struct Case {
        std::int64_t p;
        int degree;
        std::vector<std::int64_t> factors;
    };
    const Case cases[] = {
        {2, 1, {2}},      {2, 1, {4}},      {2, 1, {2, 2}},    {2, 1, {8}},
        {2, 1, {4, 2}},   {2, 1, {2, 2, 2}},{2, 1, {16}},      {2, 1, {8, 2}},
        {2, 1, {4, 4}},   {2, 1, {4, 2, 2}},{2, 1, {2, 2, 2, 2}},
        {2, 2, {2}},      {2, 2, {4}},      {2, 2, {2, 2}},    {2, 2, {8}},
        {2, 2, {4, 2}},   {2, 2, {2, 2, 2}},
        {2, 3, {2}},      {2, 3, {4}},      {2, 3, {2, 2}},
        {2, 4, {2}},      {2, 4, {4}},      {2, 4, {2, 2}},
        {3, 1, {3}},      {3, 1, {9}},      {3, 1, {3, 3}},
        {3, 2, {3}},      {5, 1, {5}},      {2, 5, {2}},       {3, 3, {3}},
    };
    for (const Case& c : cases) {
        const GroupAlgebra alg =
            build_algebra(AbelianGroup{c.factors}, build_field(c.p, c.degree), 16);
        const auto ideals = enumerate_ideals(alg);

        // local: the augmentation ideal is the one and only maximal ideal
        std::int64_t maximal = 0;
        for (const auto& code : ideals) maximal += code.dim == alg.dim - 1;
        CHECK(maximal == 1);
        CHECK(std::find(ideals.begin(), ideals.end(), augmentation_ideal(alg)) != ideals.end());
        for (const auto& code : ideals)
            if (code.dim < alg.dim && code.dim > 0)
                CHECK(stacked_rank(alg.field, augmentation_ideal(alg).basis, code.basis) ==
                      alg.dim - 1);

        std::int64_t lcd = 0, summands = 0;
        for (const auto& code : ideals) {
            const bool trivial = code.dim == 0 || code.dim == alg.dim;
            const bool lcd_e = is_lcd(alg, code, Variant::euclidean, 1);
            CHECK(lcd_e == trivial);
            lcd += lcd_e;
            if (c.degree % 2 == 0) CHECK(is_lcd(alg, code, Variant::hermitian, c.degree / 2) == trivial);
            const bool summand = is_direct_summand(alg, code, ideals);
            CHECK(summand == trivial);
            summands += summand;
        }
        CHECK(lcd == 2);
        CHECK(summands == 2);
    }
}

TEST_CASE("oracle agrees with the closed-form count") {
    struct Case {
        std::vector<std::int64_t> factors;
        std::int64_t p;
        int nu;
        Variant variant;
        std::int64_t expected;
    };
    const Case cases[] = {
        {{7}, 2, 1, Variant::euclidean, 4},
        {{6}, 2, 1, Variant::euclidean, 4},
        {{2}, 2, 1, Variant::euclidean, 2},
        {{3}, 2, 1, Variant::hermitian, 8},
        {{5}, 2, 1, Variant::hermitian, 4},
        {{3}, 2, 2, Variant::euclidean, 4},
        {{4}, 3, 1, Variant::euclidean, 8},
        {{3, 3}, 2, 1, Variant::euclidean, 32},
    };
    for (const Case& c : cases) {
        const VerificationReport report =
            verify_counts(AbelianGroup{c.factors}, c.p, c.nu, c.variant);
        CHECK(report.agreement);
        CHECK(report.lcd_total == c.expected);
        CHECK(report.formula_lcd == std::to_string(c.expected));
        CHECK(report.witnesses.empty());
    }
}

TEST_CASE("capacity refusals") {
    CHECK_THROWS_AS(verify_counts(AbelianGroup{{21}}, 2, 1, Variant::euclidean), capacity_error);
    CHECK_THROWS_AS(verify_counts(AbelianGroup{{11}}, 2, 1, Variant::hermitian), capacity_error);
    // a tighter explicit bound refuses earlier
    CHECK_THROWS_AS(verify_counts(AbelianGroup{{15}}, 2, 1, Variant::euclidean, 14),
                    capacity_error);
    CHECK(verify_counts(AbelianGroup{{15}}, 2, 1, Variant::euclidean, 15).agreement);
}
