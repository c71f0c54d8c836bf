#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charp/errors.hpp"
#include "charp/groebner.hpp"
#include "charp/parse.hpp"

#include <algorithm>
#include <vector>

using namespace charp;

namespace {

std::vector<Polynomial> parse_all(const Ring& ring, const std::vector<const char*>& texts) {
    std::vector<Polynomial> out;
    for (const char* t : texts) out.push_back(parse_polynomial(t, ring));
    return out;
}

// Classical s-polynomial, used as an independent closure oracle.
Polynomial s_poly(const Polynomial& f, const Polynomial& g) {
    const Term& lf = f.leading_term();
    const Term& lg = g.leading_term();
    const Monomial l = Monomial::lcm(lf.mono, lg.mono);
    const std::int64_t p = f.ring()->p.value();
    Polynomial a = f.times_term(Term{Monomial::quotient(l, lf.mono), fp_inv(lf.coeff, p)});
    Polynomial b = g.times_term(Term{Monomial::quotient(l, lg.mono), fp_inv(lg.coeff, p)});
    return a - b;
}

} // namespace

TEST_CASE("normal form performs substitution") {
    Ring ring = make_ring(2, {"X", "Y", "Z"});
    GroebnerBasis gb = groebner_basis(ring, parse_all(ring, {"X^2 + Y"}));
    // X^2 = Y in the quotient, so X^3 reduces to X*Y
    CHECK(normal_form(parse_polynomial("X^3", ring), gb) == parse_polynomial("X*Y", ring));
    CHECK(normal_form(parse_polynomial("X^4", ring), gb) == parse_polynomial("Y^2", ring));
    CHECK(ideal_member(parse_polynomial("X^2 + Y", ring), gb));
    CHECK_FALSE(ideal_member(parse_polynomial("X + Y", ring), gb));
}

TEST_CASE("monomial ideal membership is divisibility") {
    Ring ring = make_ring(2, {"X", "Y", "Z"});
    GroebnerBasis gb = groebner_basis(ring, parse_all(ring, {"X*Y", "X*Z", "Y*Z"}));
    CHECK(gb.gens.size() == 3);
    CHECK(ideal_member(parse_polynomial("X*Y*Z^5", ring), gb));
    CHECK(ideal_member(parse_polynomial("X*Y + Y*Z", ring), gb));
    CHECK_FALSE(ideal_member(parse_polynomial("X^7", ring), gb));
    CHECK_FALSE(ideal_member(parse_polynomial("X + Y", ring), gb));
}

TEST_CASE("reduced basis is independent of generator order") {
    Ring ring = make_ring(3, {"X", "Y", "Z"});
    std::vector<Polynomial> gens =
        parse_all(ring, {"X^2 + Y", "X*Y + Z", "Y^3 + Z", "X*Z + 2*Y^2"});
    GroebnerBasis base = groebner_basis(ring, gens);
    std::vector<Polynomial> perm = gens;
    std::sort(perm.begin(), perm.end(),
              [](const Polynomial& a, const Polynomial& b) { return compare(a, b) < 0; });
    do {
        GroebnerBasis gb = groebner_basis(ring, perm);
        REQUIRE(gb.gens.size() == base.gens.size());
        for (std::size_t i = 0; i < gb.gens.size(); ++i) CHECK(gb.gens[i] == base.gens[i]);
    } while (std::next_permutation(perm.begin(), perm.end(),
                                   [](const Polynomial& a, const Polynomial& b) {
                                       return compare(a, b) < 0;
                                   }));
}

TEST_CASE("basis is closed under s-polynomial reduction") {
    Ring ring = make_ring(5, {"X", "Y", "Z"});
    GroebnerBasis gb =
        groebner_basis(ring, parse_all(ring, {"X^2 + Y*Z", "X*Y^2 + Z", "Y^4 + 3*Z^2"}));
    for (std::size_t i = 0; i < gb.gens.size(); ++i)
        for (std::size_t j = i + 1; j < gb.gens.size(); ++j)
            CHECK(normal_form(s_poly(gb.gens[i], gb.gens[j]), gb).is_zero());
    // reduced: monic generators, no term divisible by another leading monomial
    for (std::size_t i = 0; i < gb.gens.size(); ++i) {
        CHECK(gb.gens[i].leading_term().coeff == 1);
        for (std::size_t j = 0; j < gb.gens.size(); ++j) {
            if (i == j) continue;
            for (const Term& t : gb.gens[i].terms())
                CHECK_FALSE(gb.gens[j].leading_term().mono.divides(t.mono));
        }
    }
}

TEST_CASE("pair budget is enforced and restorable") {
    Ring ring = make_ring(3, {"X", "Y", "Z"});
    std::vector<Polynomial> gens =
        parse_all(ring, {"X^2 + Y", "X*Y + Z", "Y^3 + Z", "X*Z + 2*Y^2"});
    CHECK_THROWS_AS(groebner_basis(ring, gens, 1), ResourceLimitError);
    const std::int64_t saved = default_pair_budget();
    set_default_pair_budget(1);
    CHECK_THROWS_AS(groebner_basis(ring, gens), ResourceLimitError);
    set_default_pair_budget(saved);
    CHECK(groebner_basis(ring, gens).gens.size() >= 4);
}

TEST_CASE("zero and unit inputs normalize") {
    Ring ring = make_ring(2, {"X"});
    CHECK(groebner_basis(ring, {}).gens.empty());
    CHECK(groebner_basis(ring, {Polynomial::constant(ring, 0)}).gens.empty());
    GroebnerBasis unit = groebner_basis(ring, {Polynomial::constant(ring, 1)});
    REQUIRE(unit.gens.size() == 1);
    CHECK(unit.gens[0].is_constant());
}
