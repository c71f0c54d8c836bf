#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charp/errors.hpp"
#include "charp/frobpure.hpp"
#include "charp/parse.hpp"

#include <vector>

using namespace charp;

namespace {

Ideal make_ideal(const Ring& ring, const std::vector<const char*>& texts) {
    std::vector<Polynomial> gens;
    for (const char* t : texts) gens.push_back(parse_polynomial(t, ring));
    return Ideal(ring, std::move(gens));
}

bool has_member(const std::vector<Ideal>& v, const Ideal& b) {
    for (const auto& x : v)
        if (x.equals(b)) return true;
    return false;
}

} // namespace

TEST_CASE("prime state classifies what it can") {
    Ring ring = make_ring(2, {"X", "Y", "Z"});
    CHECK(prime_state(Ideal::zero(ring)) == TriState::yes);
    CHECK(prime_state(Ideal::of_variables(ring, {0, 1})) == TriState::yes);
    CHECK(prime_state(make_ideal(ring, {"X*Y"})) == TriState::no);
    CHECK(prime_state(Ideal::unit(ring)) == TriState::no);
    CHECK(prime_state(make_ideal(ring, {"X + Y"})) == TriState::unknown);
    CHECK(prime_state(make_ideal(ring, {"X + Y"}).with_prime_flag(true)) == TriState::yes);
}

TEST_CASE("coordinate axes presentation is F-pure with the expected lattice") {
    Ring ring = make_ring(2, {"X", "Y", "Z"});
    RingPresentation pres(ring, make_ideal(ring, {"X*Y", "X*Z", "Y*Z"}));
    CHECK(pres.p() == 2);
    REQUIRE(pres.is_f_pure());
    CHECK(pres.certificate()->to_string() == "X*Y*Z");
    CHECK(pres.minimal_primes_known());
    CHECK(pres.minimal_primes().size() == 3);

    SpecialIdealLattice lat = special_ideal_lattice(pres);
    CHECK(lat.exhaustive);
    CHECK(lat.members.size() == 9);
    CHECK(lat.primes.size() == 4);
    CHECK(lat.edges.size() == 13);
    CHECK(has_member(lat.primes, Ideal::of_variables(ring, {0, 1})));
    CHECK(has_member(lat.primes, Ideal::of_variables(ring, {0, 2})));
    CHECK(has_member(lat.primes, Ideal::of_variables(ring, {1, 2})));
    CHECK(has_member(lat.primes, pres.max_ideal()));
    CHECK(has_member(lat.members, pres.defining_ideal()));
    CHECK(has_member(lat.members, Ideal::unit(ring)));
    CHECK(verify_lattice(pres, lat).empty());
}

TEST_CASE("plane plus line lattice") {
    Ring ring = make_ring(2, {"X", "Y", "Z"});
    RingPresentation pres(ring, make_ideal(ring, {"X*Y", "Y*Z"}));
    REQUIRE(pres.is_f_pure());
    CHECK(pres.certificate()->to_string() == "X*Y*Z");
    SpecialIdealLattice lat = special_ideal_lattice(pres);
    CHECK(lat.exhaustive);
    CHECK(lat.members.size() == 5);
    CHECK(lat.primes.size() == 3);
    CHECK(lat.edges.size() == 5);
    CHECK(has_member(lat.primes, Ideal::of_variables(ring, {1})));
    CHECK(has_member(lat.primes, Ideal::of_variables(ring, {0, 2})));
    CHECK(verify_lattice(pres, lat).empty());
}

TEST_CASE("four-variable lattices") {
    Ring ring = make_ring(2, {"X", "Y", "Z", "W"});
    RingPresentation planes(ring,
                            make_ideal(ring, {"X*Y*Z", "X*Y*W", "X*Z*W", "Y*Z*W"}));
    REQUIRE(planes.is_f_pure());
    CHECK(planes.certificate()->to_string() == "X*Y*Z*W");
    SpecialIdealLattice lat2 = special_ideal_lattice(planes);
    CHECK(lat2.exhaustive);
    CHECK(lat2.members.size() == 114);
    CHECK(lat2.primes.size() == 11);
    CHECK(verify_lattice(planes, lat2).empty());

    RingPresentation quadrics(ring, make_ideal(ring, {"X*Y", "Z*W"}));
    REQUIRE(quadrics.is_f_pure());
    SpecialIdealLattice lat4 = special_ideal_lattice(quadrics);
    CHECK(lat4.exhaustive);
    CHECK(lat4.members.size() == 48);
    CHECK(lat4.primes.size() == 9);
    CHECK(verify_lattice(quadrics, lat4).empty());
}

TEST_CASE("diagonal cubic cone at p = 7") {
    Ring ring = make_ring(7, {"X", "Y", "Z"});
    Ideal a = make_ideal(ring, {"X^3 + Y^3 + Z^3"}).with_prime_flag(true);
    RingPresentation pres(ring, a);
    REQUIRE(pres.is_f_pure());
    SpecialIdealLattice lat = special_ideal_lattice(pres);
    CHECK_FALSE(lat.exhaustive);
    CHECK_FALSE(lat.warnings.empty());
    CHECK(lat.members.size() == 3);
    REQUIRE(lat.primes.size() == 2);
    CHECK(has_member(lat.primes, pres.defining_ideal()));
    CHECK(has_member(lat.primes, pres.max_ideal()));
    CHECK(verify_lattice(pres, lat).empty());
}

TEST_CASE("regular line") {
    Ring ring = make_ring(2, {"X"});
    RingPresentation pres(ring, Ideal::zero(ring));
    REQUIRE(pres.is_f_pure());
    CHECK(pres.certificate()->is_constant());
    SpecialIdealLattice lat = special_ideal_lattice(pres);
    CHECK(lat.exhaustive);
    CHECK(lat.members.size() == 2);
    REQUIRE(lat.primes.size() == 1);
    CHECK(lat.primes[0].is_zero());
    CHECK(verify_lattice(pres, lat).empty());
}

TEST_CASE("display labels") {
    Ring ring = make_ring(2, {"X", "Y", "Z"});
    RingPresentation pres(ring, make_ideal(ring, {"X*Y", "X*Z", "Y*Z"}));
    CHECK(display_label(pres, pres.defining_ideal()) == "0");
    CHECK(display_label(pres, pres.max_ideal()) == "m");
    CHECK(display_label(pres, Ideal::unit(ring)) == "R");
    CHECK(display_label(pres, Ideal::of_variables(ring, {0, 1})) == "(X, Y)");
}

TEST_CASE("compatibility and star closure") {
    Ring ring = make_ring(2, {"X", "Y", "Z"});
    RingPresentation pres(ring, make_ideal(ring, {"X*Y", "X*Z", "Y*Z"}));
    SpecialIdealLattice lat = special_ideal_lattice(pres);
    for (const auto& b : lat.members) {
        CHECK(is_compatible(pres, b));
        CHECK(is_compatible_for(b, *pres.certificate()));
    }
    // star closure lands in the lattice, contains its seed, and is idempotent
    Ideal seed = make_ideal(ring, {"X"});
    Ideal closed = star_closure(pres, seed);
    CHECK(closed.contains(seed));
    CHECK(closed.contains(pres.defining_ideal()));
    CHECK(is_compatible(pres, closed));
    CHECK(star_closure(pres, closed).equals(closed));
    bool in_lattice = false;
    for (const auto& b : lat.members) in_lattice = in_lattice || b.equals(closed);
    CHECK(in_lattice);
}

TEST_CASE("single-multiplier filter reproduces the axes lattice") {
    Ring ring = make_ring(2, {"X", "Y", "Z"});
    RingPresentation pres(ring, make_ideal(ring, {"X*Y", "X*Z", "Y*Z"}));
    SpecialIdealLattice base = special_ideal_lattice(pres);
    LatticeOptions opt;
    opt.single_u = *pres.certificate();
    SpecialIdealLattice alt = special_ideal_lattice(pres, opt);
    REQUIRE(alt.members.size() == base.members.size());
    for (const auto& b : base.members) {
        bool found = false;
        for (const auto& c : alt.members) found = found || c.equals(b);
        CHECK(found);
    }
    CHECK(verify_lattice(pres, alt, opt).empty());
}

TEST_CASE("non-radical and non-F-pure guards") {
    Ring ring = make_ring(2, {"X"});
    Ideal x2 = make_ideal(ring, {"X^2"});
    CHECK_THROWS_AS(RingPresentation(ring, x2), DomainError);
    PresentationOptions opt;
    opt.check_radical = false;
    RingPresentation pres(ring, x2, opt);
    CHECK_FALSE(pres.is_f_pure());
    CHECK_FALSE(pres.certificate().has_value());
}

TEST_CASE("level ideals add the defining ideal once") {
    Ring ring = make_ring(2, {"X", "Y", "Z"});
    RingPresentation pres(ring, make_ideal(ring, {"X*Y", "X*Z", "Y*Z"}));
    Ideal at = (make_ideal(ring, {"X + Y"}) + pres.defining_ideal()).canonical();
    CHECK(pres.level_ideal(at, 0).equals(at));
    CHECK(pres.level_ideal(at, 1).equals(frobenius_power(at, 1) + pres.defining_ideal()));
    CHECK(pres.level_ideal(at, 2).equals(frobenius_power(at, 2) + pres.defining_ideal()));
}
