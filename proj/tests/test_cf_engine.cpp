#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "padiccf/cf.hpp"
#include "padiccf/io.hpp"

using namespace padiccf;

namespace {
Rat Q(const std::string& s) { return parse_rational(s); }

std::vector<Rat> quotients(const std::string& csv) {
    std::vector<Rat> out;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        out.push_back(Q(csv.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}
}  // namespace

TEST_CASE("expand worked examples") {
    PadicContext b5(5, Mode::Browkin);
    PadicContext r5(5, Mode::Ruban);

    auto e1 = expand(Q("1/3"), b5, 10);
    CHECK(e1.termination.kind == TerminationKind::Finite);
    CHECK(e1.quotients == quotients("2,-3/5"));
    CHECK(evaluate(e1.quotients) == Q("1/3"));

    auto e2 = expand(Q("1/3"), r5, 10);
    CHECK(e2.termination.kind == TerminationKind::Periodic);
    CHECK(e2.termination.preperiod == 2);
    CHECK(e2.termination.period == 1);
    CHECK(e2.quotients == quotients("2,22/5,24/5"));
    // the repeating complete quotient is -1/5
    CHECK(std::get<Rat>(e2.complete[2]) == Q("-1/5"));

    auto e3 = expand(Q("3"), b5, 10);
    CHECK(e3.termination.kind == TerminationKind::Finite);
    CHECK(e3.quotients == quotients("-2,1/5"));

    auto e4 = expand(Q("0"), r5, 10);
    CHECK(e4.termination.kind == TerminationKind::Finite);
    CHECK(e4.quotients == quotients("0"));
}

TEST_CASE("surd expansion of (-1+sqrt(101))/10 is periodic [0; 1/5 repeating]") {
    PadicContext ctx(5, Mode::Browkin, 64);
    SurdElement alpha(Q("-1/10"), Q("1/10"), 101);
    auto cf = expand(alpha, ctx, 50);
    CHECK(cf.termination.kind == TerminationKind::Periodic);
    CHECK(cf.termination.preperiod == 1);
    CHECK(cf.termination.period == 1);
    CHECK(cf.quotients == quotients("0,1/5"));

    auto q = unroll(cf, 6);
    CHECK(q == quotients("0,1/5,1/5,1/5,1/5,1/5"));
}

TEST_CASE("evaluate") {
    CHECK(evaluate(quotients("2,-3/5")) == Q("1/3"));
    CHECK(evaluate(quotients("7/3")) == Q("7/3"));
    CHECK(evaluate(quotients("0,1/5")) == Rat(5));
    CHECK_THROWS_AS(evaluate(quotients("1,0")), DivisionByZero);
    CHECK_THROWS_AS(evaluate(quotients("3,1,-1,1")), DivisionByZero);
}

TEST_CASE("convergents of [0, 1/5, 1/5, 1/5]") {
    auto conv = convergents_of(quotients("0,1/5,1/5,1/5"), 5);
    REQUIRE(conv.size() == 4);
    CHECK(conv[0].A == 0);
    CHECK(conv[0].B == 1);
    CHECK(conv[1].A == 1);
    CHECK(conv[1].B == Q("1/5"));
    CHECK(conv[2].A == Q("1/5"));
    CHECK(conv[2].B == Q("26/25"));
    CHECK(conv[3].A == Q("26/25"));
    CHECK(conv[3].B == Q("51/125"));
    // palindrome: A_2 = B_1, A_3 = B_2
    CHECK(conv[2].A == conv[1].B);
    CHECK(conv[3].A == conv[2].B);
    // determinant at i=1: A_1 B_0 - B_1 A_0 = 1
    CHECK(conv[1].A * conv[0].B - conv[1].B * conv[0].A == 1);
    // Eq. (vB): vpB_3 = -3; Eq. (vA0): vpA_3 = -2
    CHECK(conv[3].vpB == -3);
    CHECK(conv[3].vpA == -2);
}

TEST_CASE("convergents of [0] are the seeds") {
    auto conv = convergents_of(quotients("0"), 5);
    REQUIRE(conv.size() == 1);
    CHECK(conv[0].A == 0);
    CHECK(conv[0].B == 1);
    CHECK(conv[0].vpA.is_infinite());
    CHECK(conv[0].vpB == 0);
}

TEST_CASE("convergents reject vp(b_i) >= 0 for i >= 1") {
    CHECK_THROWS_AS(convergents_of(quotients("0,3"), 5), ParseError);
    CHECK_THROWS_AS(convergents_of(quotients("0,1/5,7/3"), 5), ParseError);
}

TEST_CASE("convergents tolerate raw heads with vp(b_0) > 0") {
    // A_1 = (4/5)*5 + 1 = 5: the valuation-sum shortcut for A needs a
    // floor-representable head and must not be asserted here
    auto conv = convergents_of(quotients("5,4/5"), 5);
    CHECK(conv[1].A == 5);
    CHECK(conv[1].vpA == 1);

    // decompose with negative e: A_0 = 5 gives A~ = 1, e = -1
    auto d = decompose(conv[0], 5);
    CHECK(d.A_tilde == 1);
    CHECK(d.e == -1);
    CHECK(d.B_tilde == 1);
    CHECK(d.f == 0);
    CHECK(*d.f_ge_e);
    CHECK_FALSE(*d.arch_dominated);  // |1 * 5^1| = 5 > 1
}

TEST_CASE("round trip: Browkin rational expansions are finite and exact") {
    std::mt19937_64 rng(20240619);
    std::uniform_int_distribution<long> numd(-1000000, 1000000);
    std::uniform_int_distribution<long> dend(1, 1000000);
    for (Int p : {Int(3), Int(5), Int(7), Int(11)}) {
        PadicContext ctx(p, Mode::Browkin);
        for (int t = 0; t < 250; ++t) {
            Rat x = make_rational(numd(rng), dend(rng));
            auto cf = expand(x, ctx, 200);
            REQUIRE(cf.termination.kind == TerminationKind::Finite);
            CHECK(evaluate(cf.quotients) == x);
        }
    }
}

TEST_CASE("Ruban rational expansions terminate or detect a period") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> numd(-100000, 100000);
    std::uniform_int_distribution<long> dend(1, 100000);
    for (Int p : {Int(3), Int(5), Int(7)}) {
        PadicContext ctx(p, Mode::Ruban);
        for (int t = 0; t < 100; ++t) {
            Rat x = make_rational(numd(rng), dend(rng));
            auto cf = expand(x, ctx, 5000);
            bool settled = cf.termination.kind == TerminationKind::Finite ||
                           cf.termination.kind == TerminationKind::Periodic;
            CHECK(settled);
            auto conv = convergents(cf);
            Valuation defect = approx_defect(x, conv.back(), ctx);
            CHECK(defect > -2 * conv.back().vpB.value());
        }
    }
}

TEST_CASE("identities hold along random Browkin expansions") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<long> numd(-1000000, 1000000);
    std::uniform_int_distribution<long> dend(1, 1000000);
    for (Int p : {Int(3), Int(5), Int(7), Int(11)}) {
        PadicContext ctx(p, Mode::Browkin);
        for (int t = 0; t < 50; ++t) {
            Rat x = make_rational(numd(rng), dend(rng));
            auto cf = expand(x, ctx, 200);
            auto conv = convergents(cf);  // asserts determinant, vB, vA0, arch
            long vb_sum = 0;
            for (std::size_t i = 1; i < conv.size(); ++i) {
                vb_sum += vp(cf.quotients[i], p).value();
                CHECK(conv[i].vpB == vb_sum);
                CHECK(conv[i].arch_B_le_padic);
                Valuation defect = approx_defect(x, conv[i], ctx);
                CHECK(defect > -2 * conv[i].vpB.value());
            }
        }
    }
}

TEST_CASE("approx_defect worked examples") {
    PadicContext b5(5, Mode::Browkin);
    auto e1 = expand(Q("1/3"), b5, 10);
    auto c1 = convergents(e1);
    CHECK(approx_defect(Q("1/3"), c1[0], b5) == 1);  // vp(1/3 - 2) = vp(-5/3)

    auto c2 = convergents_of(quotients("0,1/5"), 5);
    CHECK(approx_defect(Q("5"), c2[0], b5) == 1);  // vp(5 - 0)

    // surd case: x = (-1+sqrt(101))/10 against (A_2, B_2) = (1/5, 26/25)
    PadicContext ctx(5, Mode::Browkin, 16);
    SurdElement alpha(Q("-1/10"), Q("1/10"), 101);
    auto conv = convergents_of(quotients("0,1/5,1/5"), 5);
    Valuation d = approx_defect(alpha, conv[2], ctx);
    CHECK(d == 5);
    CHECK(d > 4);  // -2 vpB_2 = 4
}

TEST_CASE("shared-prefix proximity") {
    // values of two sequences agreeing on quotients 0..i differ by less than
    // 1/|B_i|_p^2 in p-adic norm
    std::mt19937_64 rng(808);
    std::uniform_int_distribution<long> ud(1, 20);
    for (int t = 0; t < 50; ++t) {
        Int p = 5;
        std::vector<Rat> base{Rat(0)};
        for (int j = 0; j < 6; ++j) {
            long u = ud(rng);
            base.push_back(make_rational(u % 5 == 0 ? u + 1 : u, 5));
        }
        std::vector<Rat> other = base;
        other.push_back(Q("7/5"));  // agree on quotients 0..6
        Rat x = evaluate(base), y = evaluate(other);
        if (x == y) continue;
        auto conv = convergents_of(base, p);
        CHECK(vp(x - y, p) > -2 * conv.back().vpB.value());
    }
}

TEST_CASE("decompose worked examples") {
    auto conv = convergents_of(quotients("0,1/5,1/5,1/5"), 5);

    auto d2 = decompose(conv[2], 5);  // (1/5, 26/25)
    CHECK(d2.A_tilde == 1);
    CHECK(d2.e == 1);
    CHECK(d2.B_tilde == 26);
    CHECK(d2.f == 2);
    CHECK(*d2.f_ge_e);
    CHECK(*d2.arch_dominated);  // |1 * 5| = 5 <= 26

    auto d0 = decompose(conv[0], 5);  // (0, 1)
    CHECK(d0.a_zero);
    CHECK(!d0.f_ge_e.has_value());

    auto d3 = decompose(conv[3], 5);  // (26/25, 51/125)
    CHECK(d3.A_tilde == 26);
    CHECK(d3.e == 2);
    CHECK(d3.B_tilde == 51);
    CHECK(d3.f == 3);
    CHECK(*d3.f_ge_e);
    CHECK_FALSE(*d3.arch_dominated);  // 26 * 5 = 130 > 51
}

TEST_CASE("unroll caps at available terms for finite expansions") {
    PadicContext b5(5, Mode::Browkin);
    auto cf = expand(Q("1/3"), b5, 10);
    CHECK(unroll(cf, 10) == quotients("2,-3/5"));
    CHECK(unroll(cf, 1) == quotients("2"));
}

TEST_CASE("surd expansion reports precision exhaustion after one doubled retry") {
    // X = sqrt(101) mod 5^40, so X - sqrt(101) needs ~41 certified digits to
    // separate from zero; a 16-digit budget retried at 32 still fails
    Int X("3254722057658581150416076926");
    SurdElement z(Rat(X), Rat(-1), 101);

    PadicContext tiny(5, Mode::Browkin, 1);
    auto cf = expand(z, tiny, 1);  // effective budget 16, retry at 32
    CHECK(cf.termination.kind == TerminationKind::PrecisionExhausted);
    CHECK(cf.termination.index == 0);

    PadicContext enough(5, Mode::Browkin, 64);
    auto ok = expand(z, enough, 4);
    CHECK(ok.termination.kind != TerminationKind::PrecisionExhausted);
    CHECK(surd_valuation(z, enough) == 40);
    CHECK(ok.quotients[0] == 0);             // v_5(z) = 40 > 0, empty floor
    CHECK(vp(ok.quotients[1], 5) == -40);    // alpha_1 = 1/z
}

TEST_CASE("sequence file parsing") {
    auto seq = parse_sequence("# header\n1/5\n\n 2/5 # trailing\n-3/5\n");
    REQUIRE(seq.size() == 3);
    CHECK(seq[0] == Q("1/5"));
    CHECK(seq[1] == Q("2/5"));
    CHECK(seq[2] == Q("-3/5"));
}
