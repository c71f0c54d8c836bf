#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charp/errors.hpp"
#include "charp/ideal.hpp"
#include "charp/parse.hpp"

#include <vector>

using namespace charp;

namespace {

Ideal make_ideal(const Ring& ring, const std::vector<const char*>& texts) {
    std::vector<Polynomial> gens;
    for (const char* t : texts) gens.push_back(parse_polynomial(t, ring));
    return Ideal(ring, std::move(gens));
}

} // namespace

TEST_CASE("colon against a single variable power") {
    Ring ring = make_ring(2, {"X", "Y", "Z"});
    Ideal x4 = make_ideal(ring, {"X^4"});
    CHECK(colon(x4, parse_polynomial("X^2", ring)).equals(make_ideal(ring, {"X^2"})));
    CHECK(colon(x4, parse_polynomial("Y", ring)).equals(x4));
    // (X^4) : (X^2, Y) = (X^2) cap (X^4) = (X^4)
    CHECK(colon(x4, make_ideal(ring, {"X^2", "Y"})).equals(x4));
}

TEST_CASE("colon by zero is the unit ideal") {
    Ring ring = make_ring(2, {"X", "Y"});
    Ideal a = make_ideal(ring, {"X*Y"});
    CHECK(colon(a, Polynomial::constant(ring, 0)).is_unit());
    CHECK(colon(a, Ideal::zero(ring)).is_unit());
}

TEST_CASE("intersection of principal ideals is their lcm") {
    Ring ring = make_ring(2, {"X", "Y", "Z"});
    CHECK(intersect(make_ideal(ring, {"X"}), make_ideal(ring, {"Y"}))
              .equals(make_ideal(ring, {"X*Y"})));
    // coprime non-monomial generators multiply
    CHECK(intersect(make_ideal(ring, {"X + Y"}), make_ideal(ring, {"Y"}))
              .equals(make_ideal(ring, {"X*Y + Y^2"})));
    // shared factor stays shared
    CHECK(intersect(make_ideal(ring, {"X*Y"}), make_ideal(ring, {"X*Z"}))
              .equals(make_ideal(ring, {"X*Y*Z"})));
    Ideal a = make_ideal(ring, {"X*Y", "X*Z", "Y*Z"});
    CHECK(intersect(a, Ideal::unit(ring)).equals(a));
    CHECK(intersect(a, Ideal::zero(ring)).is_zero());
}

TEST_CASE("sum product and containment") {
    Ring ring = make_ring(3, {"X", "Y"});
    Ideal x = make_ideal(ring, {"X"});
    Ideal y = make_ideal(ring, {"Y"});
    CHECK((x + y).equals(Ideal::of_variables(ring, {0, 1})));
    CHECK((x * y).equals(make_ideal(ring, {"X*Y"})));
    CHECK(multiply(parse_polynomial("X", ring), y).equals(make_ideal(ring, {"X*Y"})));
    CHECK(x.contains(parse_polynomial("X^5 + 2*X", ring)));
    CHECK_FALSE(x.contains(parse_polynomial("X + Y", ring)));
    CHECK((x + y).contains(x));
}

TEST_CASE("frobenius power scales generator exponents") {
    Ring ring = make_ring(2, {"X", "Y", "Z"});
    Ideal a = make_ideal(ring, {"X*Y", "X + Y"});
    CHECK(frobenius_power(a, 0).equals(a));
    CHECK(frobenius_power(a, 1).equals(make_ideal(ring, {"X^2*Y^2", "X^2 + Y^2"})));
    CHECK(frobenius_power(a, 2).equals(make_ideal(ring, {"X^4*Y^4", "X^4 + Y^4"})));
    // generator-set independence: the canonical basis gives the same power
    Ideal b = a.canonical();
    CHECK(frobenius_power(b, 1).equals(frobenius_power(a, 1)));
}

TEST_CASE("pth root inverts frobenius power") {
    Ring ring = make_ring(2, {"X", "Y", "Z"});
    CHECK(pth_root(make_ideal(ring, {"X^2*Y^2"})).equals(make_ideal(ring, {"X*Y"})));
    CHECK(pth_root(make_ideal(ring, {"X^2*Y*Z"})).equals(make_ideal(ring, {"X"})));
    CHECK(pth_root(Ideal::zero(ring)).is_zero());
    CHECK(pth_root(Ideal::unit(ring)).is_unit());
    for (const auto& texts : std::vector<std::vector<const char*>>{
             {"X + Y", "Z^2 + X"}, {"X*Y", "X*Z", "Y*Z"}, {"X^3 + Y"}}) {
        Ideal k = make_ideal(ring, texts).canonical();
        CHECK(pth_root(frobenius_power(k, 1)).equals(k));
    }
}

TEST_CASE("pth root is adjoint to frobenius power") {
    Ring ring = make_ring(2, {"X", "Y", "Z"});
    Ideal j = make_ideal(ring, {"X^3 + X*Y", "Y^2*Z"});
    Ideal k = Ideal::of_variables(ring, {0, 1});
    const bool below = k.contains(pth_root(j));
    const bool inside = frobenius_power(k, 1).contains(j);
    CHECK(below == inside);
    // unit of the adjunction: J sits inside the p-th power of its root
    CHECK(frobenius_power(pth_root(j), 1).contains(j));
}

TEST_CASE("minimal primes of a squarefree monomial ideal") {
    Ring ring = make_ring(2, {"X", "Y", "Z"});
    Ideal a = make_ideal(ring, {"X*Y", "X*Z", "Y*Z"});
    PrimeList primes = minimal_primes_monomial(a);
    REQUIRE(primes.size() == 3);
    for (const auto& q : primes) {
        CHECK(q.known_prime());
        CHECK(q.contains(a));
    }
    // the three coordinate pairs, each a minimal vertex cover
    std::vector<Ideal> want = {Ideal::of_variables(ring, {0, 1}),
                               Ideal::of_variables(ring, {0, 2}),
                               Ideal::of_variables(ring, {1, 2})};
    for (const auto& w : want) {
        bool found = false;
        for (const auto& q : primes) found = found || q.equals(w);
        CHECK(found);
    }
    PrimeList line = minimal_primes_monomial(make_ideal(ring, {"X*Y", "Y*Z"}));
    CHECK(line.size() == 2);
}

TEST_CASE("prime avoidance finds and certifies an element") {
    Ring ring = make_ring(2, {"X", "Y", "Z"});
    Ideal a = make_ideal(ring, {"X*Y", "X*Z", "Y*Z"});
    Ideal m = Ideal::of_variables(ring, {0, 1, 2});
    PrimeList pairs = minimal_primes_monomial(a);
    Polynomial s = prime_avoidance_element(m, pairs);
    CHECK(m.contains(s));
    for (const auto& q : pairs) CHECK_FALSE(q.contains(s));
    // impossible avoidance is rejected
    Ideal x = make_ideal(ring, {"X"}).with_prime_flag(true);
    CHECK_THROWS_AS(prime_avoidance_element(make_ideal(ring, {"X"}), PrimeList{x}), DomainError);
}

TEST_CASE("height against minimal primes") {
    Ring ring = make_ring(2, {"X", "Y", "Z"});
    PrimeList pairs = minimal_primes_monomial(make_ideal(ring, {"X*Y", "X*Z", "Y*Z"}));
    CHECK(has_positive_height(Ideal::unit(ring), pairs));
    CHECK(has_positive_height(Ideal::of_variables(ring, {0, 1, 2}), pairs));
    CHECK_FALSE(has_positive_height(Ideal::of_variables(ring, {0, 1}), pairs));
}

TEST_CASE("canonical form and total order") {
    Ring ring = make_ring(2, {"X", "Y"});
    Ideal a = make_ideal(ring, {"X + Y", "Y"});
    Ideal b = make_ideal(ring, {"X", "Y"});
    CHECK(a.equals(b));
    CHECK(compare(a.canonical(), b.canonical()) == std::strong_ordering::equal);
    CHECK(a.label() == "(X, Y)");
    CHECK(Ideal::zero(ring).label() == "(0)");
    CHECK(Ideal::unit(ring).label() == "(1)");
    CHECK(Ideal::zero(ring).is_zero());
    CHECK(make_ideal(ring, {"X + 1"}).is_unit() == false);
    CHECK(make_ideal(ring, {"1"}).is_unit());
    // serialize lists the reduced basis
    CHECK(b.serialize() == std::vector<std::string>{"X", "Y"});
}
