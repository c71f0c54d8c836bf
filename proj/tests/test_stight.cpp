#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charp/errors.hpp"
#include "charp/parse.hpp"
#include "charp/stight.hpp"

#include <vector>

using namespace charp;

namespace {

Ideal make_ideal(const Ring& ring, const std::vector<const char*>& texts) {
    std::vector<Polynomial> gens;
    for (const char* t : texts) gens.push_back(parse_polynomial(t, ring));
    return Ideal(ring, std::move(gens));
}

struct AxesFixture {
    Ring ring = make_ring(2, {"X", "Y", "Z"});
    RingPresentation pres{ring, make_ideal(ring, {"X*Y", "X*Z", "Y*Z"})};
    SpecialIdealLattice lat = special_ideal_lattice(pres);
    Polynomial poly(const char* s) const { return parse_polynomial(s, ring); }
};

} // namespace

TEST_CASE("multiplicative set construction and accessors") {
    AxesFixture f;
    CHECK(MultSet::one().to_string() == "One");
    CHECK(MultSet::r_circ().to_string() == "RCirc");
    CHECK(MultSet::powers(f.poly("Z")).to_string() == "powers(Z)");
    MultSet c = MultSet::complement({Ideal::of_variables(f.ring, {1})});
    CHECK(c.to_string() == "complement((Y))");
    CHECK(c.avoided_primes().size() == 1);
    CHECK_THROWS_AS(MultSet::powers(Polynomial::constant(f.ring, 0)), DomainError);
    CHECK_THROWS_AS(MultSet::complement({make_ideal(f.ring, {"X*Y"})}), DomainError);
    CHECK_THROWS_AS(MultSet::one().base(), DomainError);
    CHECK_THROWS_AS(MultSet::r_circ().avoided_primes(), DomainError);
}

TEST_CASE("meets truth table on the axes lattice") {
    AxesFixture f;
    const Ideal m = f.pres.max_ideal();
    const Ideal xy = Ideal::of_variables(f.ring, {0, 1});
    const Ideal xz = Ideal::of_variables(f.ring, {0, 2});
    CHECK(meets(f.pres, MultSet::one(), Ideal::unit(f.ring)));
    CHECK_FALSE(meets(f.pres, MultSet::one(), m));
    CHECK(meets(f.pres, MultSet::r_circ(), m));
    CHECK_FALSE(meets(f.pres, MultSet::r_circ(), xy));
    CHECK(meets(f.pres, MultSet::powers(f.poly("Z")), xz));
    CHECK_FALSE(meets(f.pres, MultSet::powers(f.poly("Z")), xy));
    MultSet avoid_y = MultSet::complement({Ideal::of_variables(f.ring, {1})});
    CHECK(meets(f.pres, avoid_y, xz));
    CHECK_FALSE(meets(f.pres, avoid_y, Ideal::of_variables(f.ring, {1})));
}

TEST_CASE("s-test ideals on the axes lattice") {
    AxesFixture f;
    CHECK(big_test_ideal(f.pres, f.lat).equals(f.pres.max_ideal()));
    CHECK(s_test_ideal(f.pres, f.lat, MultSet::r_circ()).equals(f.pres.max_ideal()));
    CHECK(s_test_ideal(f.pres, f.lat, MultSet::one()).is_unit());
    CHECK(s_test_ideal(f.pres, f.lat, MultSet::powers(f.poly("Z")))
              .equals(make_ideal(f.ring, {"Z", "X*Y"})));
    // the powers(Z) test ideal sits inside the big test ideal
    CHECK(big_test_ideal(f.pres, f.lat)
              .contains(s_test_ideal(f.pres, f.lat, MultSet::powers(f.poly("Z")))));
}

TEST_CASE("s-test ideal for a complement set") {
    Ring ring = make_ring(2, {"X", "Y", "Z"});
    RingPresentation pres(ring, make_ideal(ring, {"X*Y", "Y*Z"}));
    SpecialIdealLattice lat = special_ideal_lattice(pres);
    CHECK(big_test_ideal(pres, lat).equals(pres.max_ideal()));
    MultSet avoid_y = MultSet::complement({Ideal::of_variables(ring, {1})});
    CHECK(s_test_ideal(pres, lat, avoid_y).equals(Ideal::of_variables(ring, {0, 2})));
}

TEST_CASE("closure multiplier lies in the set and in its test ideal") {
    AxesFixture f;
    CHECK(closure_multiplier(f.pres, f.lat, MultSet::one()).is_constant());
    CHECK(closure_multiplier(f.pres, f.lat, MultSet::powers(f.poly("Z"))) == f.poly("Z"));
    Polynomial s = closure_multiplier(f.pres, f.lat, MultSet::r_circ());
    CHECK(s_test_ideal(f.pres, f.lat, MultSet::r_circ()).contains(s));
    for (const auto& q : f.pres.minimal_primes()) CHECK_FALSE(q.contains(s));
}

TEST_CASE("realization of lattice members as s-test ideals") {
    Ring ring = make_ring(2, {"X", "Y", "Z"});
    RingPresentation pres3(ring, make_ideal(ring, {"X*Y", "Y*Z"}));
    SpecialIdealLattice lat3 = special_ideal_lattice(pres3);
    MultSet s = realize_as_s_test_ideal(pres3, lat3, Ideal::of_variables(ring, {0, 2}));
    REQUIRE(s.kind() == MultSet::Kind::complement_of_primes);
    REQUIRE(s.avoided_primes().size() == 1);
    CHECK(s.avoided_primes()[0].equals(Ideal::of_variables(ring, {1})));

    AxesFixture f;
    MultSet all = realize_as_s_test_ideal(f.pres, f.lat, f.pres.defining_ideal());
    CHECK(all.kind() == MultSet::Kind::complement_of_primes);
    CHECK(all.avoided_primes().empty());
    MultSet unit = realize_as_s_test_ideal(f.pres, f.lat, Ideal::unit(f.ring));
    CHECK(unit.kind() == MultSet::Kind::one);
    CHECK_THROWS_AS(realize_as_s_test_ideal(f.pres, f.lat, make_ideal(f.ring, {"X^2"})),
                    DomainError);
}

TEST_CASE("realization roundtrip over two lattices") {
    AxesFixture f;
    for (const auto& b : f.lat.members) {
        MultSet s = realize_as_s_test_ideal(f.pres, f.lat, b);
        CHECK(s_test_ideal(f.pres, f.lat, s).equals(b));
    }
    Ring ring = make_ring(2, {"X", "Y", "Z"});
    RingPresentation pres3(ring, make_ideal(ring, {"X*Y", "Y*Z"}));
    SpecialIdealLattice lat3 = special_ideal_lattice(pres3);
    for (const auto& b : lat3.members) {
        MultSet s = realize_as_s_test_ideal(pres3, lat3, b);
        CHECK(s_test_ideal(pres3, lat3, s).equals(b));
    }
}

TEST_CASE("closure membership verdicts") {
    AxesFixture f;
    const Ideal at = make_ideal(f.ring, {"X + Y"});

    MembershipVerdict up =
        tight_closure_membership(f.pres, f.lat, f.poly("X"), at, MultSet::r_circ(), 4);
    CHECK(up.status == MembershipStatus::member_up_to_bound);
    CHECK(up.bound == 4);
    REQUIRE(up.certificate.has_value());
    CHECK(up.certificate->to_string() == "X + Y + Z");

    MembershipVerdict out =
        tight_closure_membership(f.pres, f.lat, f.poly("X"), at, MultSet::one(), 4);
    CHECK(out.status == MembershipStatus::non_member);
    CHECK(out.witness_level == 0);

    // X * Z^(2^j) falls into the defining ideal at every level, so Z is
    // swallowed into (Y) under powers(X), and monomial data decides exactly
    MembershipVerdict in = tight_closure_membership(f.pres, f.lat, f.poly("Z"),
                                                    make_ideal(f.ring, {"Y"}),
                                                    MultSet::powers(f.poly("X")), 4);
    CHECK(in.status == MembershipStatus::member_certified);

    MembershipVerdict lvl1 = tight_closure_membership(
        f.pres, f.lat, f.poly("X"), make_ideal(f.ring, {"X^2"}), MultSet::r_circ(), 4);
    CHECK(lvl1.status == MembershipStatus::non_member);
    CHECK(lvl1.witness_level == 1);

    MembershipVerdict triv = tight_closure_membership(
        f.pres, f.lat, f.poly("X*Y"), make_ideal(f.ring, {"X^2"}), MultSet::r_circ(), 4);
    CHECK(triv.status == MembershipStatus::member_certified);
    CHECK_FALSE(triv.certificate.has_value());
}

TEST_CASE("membership validates its inputs") {
    AxesFixture f;
    CHECK_THROWS_AS(tight_closure_membership(f.pres, f.lat, f.poly("X"),
                                             make_ideal(f.ring, {"X"}), MultSet::one(), -1),
                    DomainError);
    Ring line = make_ring(2, {"X"});
    PresentationOptions opt;
    opt.check_radical = false;
    RingPresentation impure(line, Ideal(line, {parse_polynomial("X^2", line)}), opt);
    SpecialIdealLattice lat = special_ideal_lattice(impure);
    CHECK_THROWS_AS(tight_closure_membership(impure, lat, parse_polynomial("X", line),
                                             Ideal(line, {parse_polynomial("X^2", line)}),
                                             MultSet::one(), 4),
                    DomainError);
}

TEST_CASE("test ideal chains") {
    AxesFixture f;
    CHECK(render_chain(test_ideal_chain(f.pres, f.lat)) == "0 < m < R");

    Ring ring = make_ring(2, {"X", "Y", "Z"});
    RingPresentation pres3(ring, make_ideal(ring, {"X*Y", "Y*Z"}));
    CHECK(render_chain(test_ideal_chain(pres3, special_ideal_lattice(pres3))) == "0 < m < R");

    Ring r7 = make_ring(7, {"X", "Y", "Z"});
    Ideal cubic = Ideal(r7, {parse_polynomial("X^3 + Y^3 + Z^3", r7)}).with_prime_flag(true);
    RingPresentation presf(r7, cubic);
    CHECK(render_chain(test_ideal_chain(presf, special_ideal_lattice(presf))) == "0 < m < R");

    Ring line = make_ring(2, {"X"});
    RingPresentation reg(line, Ideal::zero(line));
    SpecialIdealLattice rlat = special_ideal_lattice(reg);
    CHECK(big_test_ideal(reg, rlat).is_unit());
    CHECK(render_chain(test_ideal_chain(reg, rlat)) == "0 < R");
}

TEST_CASE("four-variable chains pass through the coordinate products") {
    Ring ring = make_ring(2, {"X", "Y", "Z", "W"});
    const Ideal mid = make_ideal(ring, {"X*Y", "X*Z", "X*W", "Y*Z", "Y*W", "Z*W"});
    auto check_chain = [&](const RingPresentation& pres, const SpecialIdealLattice& lat) {
        CHECK(big_test_ideal(pres, lat).equals(mid));
        IdealChain c = test_ideal_chain(pres, lat);
        REQUIRE(c.steps.size() == 4);
        CHECK(c.steps[0].equals(pres.defining_ideal()));
        CHECK(c.steps[1].equals(mid));
        CHECK(c.steps[2].equals(pres.max_ideal()));
        CHECK(c.steps[3].is_unit());
        CHECK(c.labels.front() == "0");
        CHECK(c.labels.back() == "R");
        CHECK(render_chain(c) == "0 < (X*Y, X*Z, Y*Z, X*W, Y*W, Z*W) < m < R");
    };
    RingPresentation planes(ring, make_ideal(ring, {"X*Y*Z", "X*Y*W", "X*Z*W", "Y*Z*W"}));
    check_chain(planes, special_ideal_lattice(planes));
    RingPresentation quadrics(ring, make_ideal(ring, {"X*Y", "Z*W"}));
    check_chain(quadrics, special_ideal_lattice(quadrics));
}
