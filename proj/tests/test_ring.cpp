#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace polyfunc;
using namespace testutil;

TEST_CASE("gcd on integers and polynomials") {
    CHECK(gcd(zi(12), zi(18)) == zi(6));
    CHECK(gcd(zi(0), zi(-12)) == zi(12));  // gcd with zero is the normalized other argument
    CHECK(gcd(zi(0), zi(0)) == zi(0));

    Ring f2 = RingInstance::gf(2);
    CHECK(gcd(el(f2, "t^2+t"), el(f2, "t^2")) == el(f2, "t"));
    CHECK(gcd(el(f2, "0"), el(f2, "t^2+t")) == el(f2, "t^2+t"));

    CHECK_THROWS_AS(gcd(zi(2), el(f2, "t")), DomainError);
}

TEST_CASE("gcd properties") {
    for (long long a = -6; a <= 6; ++a)
        for (long long b = -6; b <= 6; ++b) {
            BaseElement g = gcd(zi(a), zi(b));
            CHECK(g == gcd(zi(b), zi(a)));
            if (!g.is_zero()) {
                CHECK(divides(g, zi(a)));
                CHECK(divides(g, zi(b)));
            }
            for (long long c : {-4, 3, 10})
                CHECK(gcd(gcd(zi(a), zi(b)), zi(c)) == gcd(zi(a), gcd(zi(b), zi(c))));
        }
    Ring f3 = RingInstance::gf(3);
    for (const auto& a : monic_ideals(f3, 2))
        for (const auto& b : monic_ideals(f3, 2)) {
            BaseElement g = gcd(a.generator(), b.generator());
            CHECK(g.poly_value().coeffs.back() == f3->fq_one());  // monic inputs, monic gcd
            CHECK(divides(g, a.generator()));
            CHECK(divides(g, b.generator()));
        }
}

TEST_CASE("factorize basics") {
    auto f12 = factorize(zideal(12));
    REQUIRE(f12.size() == 2);
    CHECK(f12[0].first == zideal(2));
    CHECK(f12[0].second == 2);
    CHECK(f12[1].first == zideal(3));
    CHECK(f12[1].second == 1);

    Ring f2 = RingInstance::gf(2);
    auto ftt = factorize(ideal(f2, "t^2+t"));
    REQUIRE(ftt.size() == 2);
    CHECK(ftt[0].first == ideal(f2, "t"));
    CHECK(ftt[1].first == ideal(f2, "t+1"));
    CHECK(ftt[0].second == 1);
    CHECK(ftt[1].second == 1);

    auto fsq = factorize(ideal(f2, "t^2+1"));  // (t+1)^2 in characteristic 2
    REQUIRE(fsq.size() == 1);
    CHECK(fsq[0].first == ideal(f2, "t+1"));
    CHECK(fsq[0].second == 2);

    CHECK_THROWS_AS(factorize(zideal(0)), DomainError);
    CHECK_THROWS_AS(factorize(zideal(1)), DomainError);
}

TEST_CASE("factorize round trip") {
    for (long long n = 2; n <= 10000; ++n) {
        BaseElement prod = zi(1);
        for (const auto& [p, e] : factorize(zideal(n)))
            for (uint32_t i = 0; i < e; ++i) prod = prod * p.generator();
        CHECK(prod == zi(n));
    }
    for (Ring r : {RingInstance::gf(2), RingInstance::gf(3), RingInstance::gf(2, 2)}) {
        for (const auto& g : monic_ideals(r, 5)) {
            BaseElement prod = BaseElement::one(r);
            for (const auto& [p, e] : factorize(g))
                for (uint32_t i = 0; i < e; ++i) prod = prod * p.generator();
            CHECK(prod == g.generator());
        }
    }
}

TEST_CASE("crt_combine") {
    CHECK(crt_combine({zi(1), zi(2)}, {zideal(2), zideal(3)}) == zi(5));
    CHECK(crt_combine({zi(0)}, {zideal(7)}) == zi(0));

    Ring f2 = RingInstance::gf(2);
    BaseElement x = crt_combine({el(f2, "1"), el(f2, "t")}, {ideal(f2, "t"), ideal(f2, "t+1")});
    CHECK(mod(x, el(f2, "t")) == el(f2, "1"));
    CHECK(mod(x - el(f2, "t"), el(f2, "t+1")).is_zero());
    CHECK(x == el(f2, "1"));

    CHECK_THROWS_AS(crt_combine({zi(1), zi(1)}, {zideal(4), zideal(6)}), DomainError);
}

TEST_CASE("crt_combine satisfies every congruence") {
    std::vector<IdealGen> moduli = {zideal(4), zideal(9), zideal(5)};
    for (long long a = 0; a < 4; ++a)
        for (long long b = 0; b < 9; b += 2)
            for (long long c = 0; c < 5; ++c) {
                BaseElement x = crt_combine({zi(a), zi(b), zi(c)}, moduli);
                CHECK(mod(x, zi(4)) == zi(a));
                CHECK(mod(x, zi(9)) == zi(b));
                CHECK(mod(x, zi(5)) == zi(c));
            }
    Ring f3 = RingInstance::gf(3);
    std::vector<IdealGen> pm = {ideal(f3, "t"), ideal(f3, "t+1")};
    for (const auto& a : residues_mod(pm[0]))
        for (const auto& b : residues_mod(pm[1])) {
            BaseElement x = crt_combine({a, b}, pm);
            CHECK(mod(x, pm[0].generator()) == a);
            CHECK(mod(x - b, pm[1].generator()).is_zero());
        }
}

TEST_CASE("residues_mod") {
    auto r4 = residues_mod(zideal(4));
    REQUIRE(r4.size() == 4);
    for (long long i = 0; i < 4; ++i) CHECK(r4[i] == zi(i));

    Ring f2 = RingInstance::gf(2);
    auto rt2 = residues_mod(ideal(f2, "t^2"));
    REQUIRE(rt2.size() == 4);
    CHECK(rt2[0] == el(f2, "0"));
    CHECK(rt2[1] == el(f2, "1"));
    CHECK(rt2[2] == el(f2, "t"));
    CHECK(rt2[3] == el(f2, "t+1"));

    Ring f3 = RingInstance::gf(3);
    auto rt = residues_mod(ideal(f3, "t"));
    REQUIRE(rt.size() == 3);
    CHECK(rt[2] == el(f3, "2"));

    CHECK_THROWS_AS(residues_mod(zideal(1)), DomainError);
    CHECK_THROWS_AS(residues_mod(zideal(0)), DomainError);
}

TEST_CASE("residues_mod pairwise incongruent") {
    for (const IdealGen& I :
         {zideal(7), zideal(12), ideal(RingInstance::gf(2), "t^3+t"), ideal(RingInstance::gf(3), "t^2")}) {
        auto rs = residues_mod(I);
        for (size_t i = 0; i < rs.size(); ++i)
            for (size_t j = i + 1; j < rs.size(); ++j)
                CHECK(!mod(rs[i] - rs[j], I.generator()).is_zero());
    }
}

TEST_CASE("ideal_in_quotient and containment") {
    CHECK(ideal_in_quotient(zideal(8), zideal(4)) == zideal(4));  // <2>^2 = <2>^3 in Z/4
    CHECK(ideal_in_quotient(zideal(6), zideal(4)) == zideal(2));
    Ring f2 = RingInstance::gf(2);
    CHECK(ideal_in_quotient(ideal(f2, "t^3"), ideal(f2, "t^2")) == ideal(f2, "t^2"));

    CHECK(ideal_contains(zideal(2), zideal(8), zideal(4)));
    CHECK(ideal_contains(zideal(4), zideal(8), zideal(4)));   // eq. of stabilized powers
    CHECK(!ideal_contains(zideal(4), zideal(2), zideal(4)));
}

TEST_CASE("solve_linear_congruence examples") {
    CHECK(!solve_linear_congruence(zi(2), zi(1), zideal(4)).has_value());
    auto s = solve_linear_congruence(zi(2), zi(2), zideal(4));
    REQUIRE(s.has_value());
    CHECK(*s == zi(1));  // canonical pick among {1, 3}

    Ring f2 = RingInstance::gf(2);
    auto sp = solve_linear_congruence(el(f2, "t"), el(f2, "t^2+t"), ideal(f2, "t^2"));
    REQUIRE(sp.has_value());
    // Exhaustive scan: t*x = t^2+t (mod t^2) holds for x in {1, t+1}; the
    // canonical solution is the one of smallest digit index.
    CHECK(((*sp == el(f2, "1")) || (*sp == el(f2, "t+1"))));
    CHECK(*sp == el(f2, "1"));
}

TEST_CASE("solve_linear_congruence agrees with exhaustive scan") {
    auto scan = [](const BaseElement& c, const BaseElement& d, const IdealGen& m) {
        std::vector<BaseElement> sols;
        for (const auto& x : residues_mod(m))
            if (mod(c * x - d, m.generator()).is_zero()) sols.push_back(x);
        return sols;
    };
    for (long long m = 2; m <= 12; ++m)
        for (long long c = 0; c < m; ++c)
            for (long long d = 0; d < m; ++d) {
                auto got = solve_linear_congruence(zi(c), zi(d), zideal(m));
                auto sols = scan(zi(c), zi(d), zideal(m));
                CHECK(got.has_value() == !sols.empty());
                if (got) CHECK(*got == sols.front());  // smallest index solution
            }
    for (Ring r : {RingInstance::gf(2), RingInstance::gf(3)})
        for (const auto& m : monic_ideals(r, 2)) {
            auto rs = residues_mod(m);
            for (const auto& c : rs)
                for (const auto& d : rs) {
                    auto got = solve_linear_congruence(c, d, m);
                    auto sols = scan(c, d, m);
                    CHECK(got.has_value() == !sols.empty());
                    if (got) CHECK(*got == sols.front());
                }
        }
}

TEST_CASE("finite field arithmetic") {
    Ring f4 = RingInstance::gf(2, 2);
    CHECK(f4->defining_poly() == std::vector<uint32_t>{1, 1, 1});  // u^2+u+1
    GFElement u = f4->fq_from_index(2);
    GFElement u1 = f4->fq_from_index(3);
    CHECK(f4->fq_mul(u, u1) == f4->fq_one());  // u(u+1) = u^2+u = 1
    CHECK(f4->fq_inv(u) == u1);

    Ring f9 = RingInstance::gf(3, 2);
    CHECK(f9->defining_poly() == std::vector<uint32_t>{1, 0, 1});  // u^2+1
    for (uint64_t i = 1; i < 9; ++i) {
        GFElement a = f9->fq_from_index(i);
        CHECK(f9->fq_mul(a, f9->fq_inv(a)) == f9->fq_one());
        CHECK(f9->fq_index(a) == i);
    }
    CHECK_THROWS_AS(RingInstance::gf(4, 1), DomainError);       // 4 is not prime
    CHECK_THROWS_AS(RingInstance::gf(2, 2, {0, 0, 1}), DomainError);  // u^2 reducible
}

TEST_CASE("ideal normalization is canonical") {
    CHECK(IdealGen(zi(-12)) == zideal(12));
    Ring f3 = RingInstance::gf(3);
    CHECK(IdealGen(el(f3, "2*t+2")) == ideal(f3, "t+1"));
    CHECK(zideal(0).is_zero());
    CHECK(zideal(1).is_unit());
    CHECK(zideal(6).norm() == 6);
    CHECK(ideal(f3, "t^2").norm() == 9);
}

TEST_CASE("element enumeration round trip") {
    Ring f4 = RingInstance::gf(2, 2);
    for (long long k = 0; k < 64; ++k) {
        BaseElement e = element_at_index(f4, BigInt(k));
        CHECK(element_index(e) == BigInt(k));
    }
    CHECK(element_at_index(Z(), BigInt(7)) == zi(7));
}
