#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "padiccf/criteria.hpp"
#include "padiccf/io.hpp"

using namespace padiccf;

namespace {
Rat Q(const std::string& s) { return parse_rational(s); }
}

TEST_CASE("growth margin check") {
    auto conv = convergents_of({Q("0"), Q("1/5"), Q("1/5"), Q("1/5")}, 5);
    auto rep = growth_margin_check(conv, 5);
    CHECK(rep.holds_on_range());  // (26/25)^4 < 5^3 at i=3 etc.

    // i=1 with A_1 = 1, B_1 = 1/5: max = 1, 1 < 5
    auto conv1 = convergents_of({Q("0"), Q("1/5")}, 5);
    CHECK(growth_margin_check(conv1, 5).holds_on_range());

    // b_1 = 26/5: |B_1| = 26/5, (26/5)^4 = 456976/625 > 5 fails at i=1
    auto conv2 = convergents_of({Q("0"), Q("26/5")}, 5);
    auto rep2 = growth_margin_check(conv2, 5);
    CHECK_FALSE(rep2.holds_on_range());
    CHECK(*rep2.first_violation == 1);

    CHECK_THROWS_AS(growth_margin_check(convergents_of({Q("2"), Q("1/5")}, 5), 5), NonzeroB0);
}

TEST_CASE("palindrome approximation inequality: worked surd case") {
    PadicContext ctx(5, Mode::Browkin, 32);
    SurdElement x(Q("-1/10"), Q("1/10"), 101);
    std::vector<Rat> pqs{Q("1/5"), Q("1/5"), Q("1/5"), Q("1/5")};
    std::vector<Rat> full{Q("0")};
    for (auto& b : pqs) full.push_back(b);
    auto conv = convergents_of(full, 5);
    auto pal = palindromic_prefixes(pqs);

    auto rep = palindrome_approximation_check(x, conv, pal, ctx);
    CHECK(rep.holds_on_range());

    // the worked n=2 entry: v(x^2 - A_1/B_2) = 4 > 3 = v(b_1) - 2 v(B_2)
    bool found = false;
    for (const auto& v : rep.verdicts)
        if (v.index == 2) {
            found = true;
            CHECK(v.holds);
            CHECK(v.note.find("= 4") != std::string::npos);
            CHECK(v.note.find("= 3") != std::string::npos);
        }
    CHECK(found);

    // exact value cross-check: x^2 - A_1/B_2 = (76 - 26 sqrt(101))/1300
    SurdElement lhs = x * x - conv[1].A / conv[2].B;
    CHECK(surd_valuation(lhs * Rat(1300), ctx.with_precision(8)) == 6);
}

TEST_CASE("palindrome approximation across synthetic periodic palindromes") {
    // palindromic block repeated: the value is quadratic; check at all
    // palindromic n >= 2 within three periods
    std::mt19937_64 rng(60601);
    std::vector<Rat> pl{Q("1/5"), Q("2/5"), Q("3/5"), Q("-1/5"), Q("1/25")};
    std::uniform_int_distribution<std::size_t> pick(0, pl.size() - 1);
    std::uniform_int_distribution<int> len(1, 3);
    PadicContext ctx(5, Mode::Browkin, 64);

    for (int t = 0; t < 50; ++t) {
        int L = len(rng);
        std::vector<Rat> half;
        for (int j = 0; j < L; ++j) half.push_back(pl[pick(rng)]);
        std::vector<Rat> block = half;
        for (int j = L - 2; j >= 0; --j) block.push_back(half[j]);  // odd palindrome block

        auto rel = tail_quadratic(block, 1, block.size(), ctx);
        if (!rel.eta) continue;
        REQUIRE(rel.root_verified);

        std::vector<Rat> pqs;
        for (int rep = 0; rep < 3; ++rep)
            for (const auto& b : block) pqs.push_back(b);
        std::vector<Rat> full{Q("0")};
        for (auto& b : pqs) full.push_back(b);
        auto conv = convergents_of(full, 5);
        auto pal = palindromic_prefixes(pqs);
        REQUIRE(!pal.lengths.empty());

        auto rep2 = palindrome_approximation_check(as_surd(*rel.eta), conv, pal, ctx);
        CHECK(rep2.holds_on_range());
    }
}

TEST_CASE("subspace product diagnostic") {
    PadicContext ctx(5, Mode::Browkin, 64);
    SurdElement x(Q("-1/10"), Q("1/10"), 101);
    std::vector<Rat> full{Q("0"), Q("1/5"), Q("1/5"), Q("1/5"), Q("1/5")};
    auto conv = convergents_of(full, 5);

    auto diag = subspace_product(x, conv, 3, Q("1/10"), ctx);
    CHECK(diag.product_lt_one);
    CHECK(diag.chain_negative);  // (3+eps)n/4 - (1-eps)n < 0 for eps = 1/10

    // eps = 0 degenerates to the un-tilted product; still computable
    auto diag0 = subspace_product(x, conv, 3, Q("0"), ctx);
    CHECK(diag0.product_lt_one);

    // non-palindromic triple is rejected
    std::vector<Rat> full2{Q("0"), Q("1/5"), Q("2/5"), Q("3/5")};
    auto conv2 = convergents_of(full2, 5);
    CHECK_THROWS_AS(subspace_product(x, conv2, 2, Q("1/10"), ctx), NotPalindromic);
}

TEST_CASE("subspace product stays below one along the periodic expansion") {
    PadicContext ctx(5, Mode::Browkin, 128);
    SurdElement x(Q("-1/10"), Q("1/10"), 101);
    std::vector<Rat> full{Q("0")};
    for (int j = 0; j < 12; ++j) full.push_back(Q("1/5"));
    auto conv = convergents_of(full, 5);
    for (std::size_t n = 1; n <= 11; ++n) {  // every prefix of 1/5s is palindromic
        auto diag = subspace_product(x, conv, n, Q("1/10"), ctx);
        CHECK(diag.product_lt_one);
    }
}

TEST_CASE("tail quadratic worked examples") {
    PadicContext ctx(5, Mode::Browkin, 32);

    // h=1, k=1, tail [1/5]: P = -1, Q = -1/5, R = 1, eta = (-1+sqrt(101))/10
    auto rel = tail_quadratic({Q("1/5")}, 1, 1, ctx);
    CHECK(rel.P == Q("-1"));
    CHECK(rel.Q == Q("-1/5"));
    CHECK(rel.R == Q("1"));
    CHECK(rel.height_bound == Rat(50));
    CHECK(rel.height_ok);
    REQUIRE(rel.eta.has_value());
    SurdElement eta = as_surd(*rel.eta);
    CHECK(eta.a() == Q("-1/10"));
    CHECK(abs(eta.b() * eta.b() * Rat(eta.D())) == Q("101/100"));
    CHECK(rel.root_verified);

    // generic h=1, k=1: P = -1 always
    auto rel2 = tail_quadratic({Q("7/5")}, 1, 1, ctx);
    CHECK(rel2.P == Q("-1"));

    // h=2, k=1 on [1/5, 1/5]: P = B_0 B_2 - B_1 B_1 = 26/25 - 1/25 = 1
    auto rel3 = tail_quadratic({Q("1/5"), Q("1/5")}, 2, 1, ctx);
    CHECK(rel3.P == Q("1"));
    CHECK(rel3.height_bound == Rat(1250));  // 2 |B_2|_5^2 = 2 * 625
    CHECK(rel3.height_ok);

    CHECK_THROWS_AS(tail_quadratic({Q("1/5")}, 2, 1, ctx), IndexOutOfRange);
}

TEST_CASE("tail quadratic height bound over random sequences") {
    std::mt19937_64 rng(424243);
    std::uniform_int_distribution<long> ud(1, 24);
    std::uniform_int_distribution<int> vd(1, 2);
    PadicContext ctx(5, Mode::Browkin, 32);
    for (int t = 0; t < 60; ++t) {
        std::vector<Rat> pqs;
        std::size_t n = 4 + static_cast<std::size_t>(t % 37);  // lengths up to 40
        for (std::size_t j = 0; j < n; ++j) {
            long u = ud(rng);
            if (u % 5 == 0) ++u;
            pqs.push_back(make_rational(u, vd(rng) == 1 ? 5 : 25));
        }
        std::uniform_int_distribution<std::size_t> hd(1, n - 1);
        std::size_t h = hd(rng);
        std::uniform_int_distribution<std::size_t> kd(1, n - h + 1);
        std::size_t k = kd(rng);
        auto rel = tail_quadratic(pqs, h, k, ctx, false);
        CHECK(rel.height_ok);
    }
}

TEST_CASE("tail quadratic realizes rational periodic tails") {
    PadicContext ctx(5, Mode::Ruban, 32);
    // eta = [0, repeat(624/25)] = -25: disc is a rational square
    auto rel = tail_quadratic({Q("624/25")}, 1, 1, ctx);
    REQUIRE(rel.eta.has_value());
    REQUIRE(std::holds_alternative<Rat>(*rel.eta));
    CHECK(std::get<Rat>(*rel.eta) == Q("-25"));
    CHECK(rel.root_verified);
}

TEST_CASE("quasiperiodic hypotheses check") {
    auto conv = convergents_of({Q("0"), Q("1/5"), Q("1/5"), Q("1/5")}, 5);

    // i0 = 2 reproduces the worked trace: 1/5 <= 26/25 holds at i=2,
    // 26/25 > 51/125 fails at i=3
    auto res = quasiperiodic_check(conv, {{1, 1, 3}}, Q("1"), 2);
    CHECK_FALSE(res.arch.holds_on_range());
    CHECK(*res.arch.first_violation == 3);

    // with i0 = 1 the A_1 = 1 > B_1 = 1/5 violation surfaces first
    auto res1 = quasiperiodic_check(conv, {{1, 1, 3}}, Q("1"), 1);
    CHECK(*res1.arch.first_violation == 1);

    // blocks: k = 1 < C n for n = 4, C = 1
    auto res2 = quasiperiodic_check(conv, {{4, 1, 5}}, Q("1"), 2);
    CHECK(res2.blocks.holds_on_range());

    auto res3 = quasiperiodic_check(conv, {}, Q("1"), 2);
    CHECK(res3.verdict == "no quasi-periodic structure detected");
}
