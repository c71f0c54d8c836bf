#include "charp/fixtures.hpp"

namespace charp {

namespace {

const char* const k_fp17_1 = R"__(# Three coordinate axes through the origin at p = 2.
title = coordinate axes
p = 2
vars = X, Y, Z
a = (X*Y, X*Z, Y*Z)

[fpure-check]
expect_fpure = true
expect_u = X*Y*Z

[special-ideals]
expect_member_count = 9
expect_primes = (X, Y); (X, Z); (Y, Z); m
expect_exhaustive = true

[s-test-ideal]
S = RCirc
expect = m

[realize]
target = (X, Y)
expect_kind = complement
expect_avoid = (X, Z); (Y, Z)

[tight-closure]
r = X
a_test = (X + Y)
S = RCirc
levels = 4
expect = MemberUpToBound
expect_certificate = X + Y + Z

[tight-closure]
r = X
a_test = (X + Y)
S = One
levels = 4
expect = NonMember
expect_witness_level = 0

[chain]
expect_chain = 0 < m < R

[skewmod-crosscheck]
a_test = (X + Y)
S = RCirc
levels = 4
degree_cap = 6
expect_contains = X
expect_dimension = 1
)__";

const char* const k_fp17_2 = R"__(# Union of the four coordinate planes in four variables at p = 2.
title = four coordinate planes
p = 2
vars = X, Y, Z, W
a = (X*Y*Z, X*Y*W, X*Z*W, Y*Z*W)

[fpure-check]
expect_fpure = true
expect_u = X*Y*Z*W

[special-ideals]
expect_member_count = 114
expect_exhaustive = true
expect_primes_contain = (X, Y); (X, Z); (X, W); (Y, Z); (Y, W); (Z, W); (X, Y, Z); (X, Y, W); (X, Z, W); (Y, Z, W); m
expect_members_contain = (X*Y, X*Z, X*W, Y*Z, Y*W, Z*W)

[s-test-ideal]
S = RCirc
expect = (X*Y, X*Z, X*W, Y*Z, Y*W, Z*W)

[chain]
expect_chain = 0 < (X*Y, X*Z, Y*Z, X*W, Y*W, Z*W) < m < R
)__";

const char* const k_fp17_3 = R"__(# A plane and a line meeting at the origin at p = 2.
title = plane plus line
p = 2
vars = X, Y, Z
a = (X*Y, Y*Z)

[fpure-check]
expect_fpure = true
expect_u = X*Y*Z

[special-ideals]
expect_member_count = 5
expect_primes = (X, Z); (Y); m
expect_exhaustive = true

[s-test-ideal]
S = complement((Y))
expect = (X, Z)

[realize]
target = (X, Z)
expect_kind = complement
expect_avoid = (Y)

[chain]
expect_chain = 0 < m < R
)__";

const char* const k_fp17_4 = R"__(# Two transversal planes glued along disjoint variable pairs at p = 2.
title = quadric pair
p = 2
vars = X, Y, Z, W
a = (X*Y, Z*W)

[fpure-check]
expect_fpure = true
expect_u = X*Y*Z*W

[special-ideals]
expect_member_count = 48
expect_exhaustive = true
expect_primes_contain = (X, Z); (X, W); (Y, Z); (Y, W); (X, Y, Z); (X, Y, W); (X, Z, W); (Y, Z, W); m

[s-test-ideal]
S = RCirc
expect = (X*Y, X*Z, X*W, Y*Z, Y*W, Z*W)

[chain]
expect_chain = 0 < (X*Y, X*Z, Y*Z, X*W, Y*W, Z*W) < m < R
)__";

const char* const k_fp14a = R"__(# Diagonal cubic cone at p = 7; the defining polynomial is declared prime.
title = diagonal cubic cone
p = 7
vars = X, Y, Z
a = (X^3 + Y^3 + Z^3)
a_prime = true

[fpure-check]
expect_fpure = true

[special-ideals]
expect_member_count = 3
expect_primes = 0; m
expect_exhaustive = false

[s-test-ideal]
S = RCirc
expect = m

[chain]
expect_chain = 0 < m < R
)__";

const char* const k_regular = R"__(# Regular baseline: the polynomial line itself at p = 2.
title = regular line
p = 2
vars = X
a = 0

[fpure-check]
expect_fpure = true
expect_u = 1

[special-ideals]
expect_member_count = 2
expect_primes = 0
expect_exhaustive = true

[s-test-ideal]
S = RCirc
expect = R

[chain]
expect_chain = 0 < R
)__";

} // namespace

const std::vector<Fixture>& bundled_fixtures() {
    static const std::vector<Fixture> all = {
        {"fp17_1", k_fp17_1},
        {"fp17_2", k_fp17_2},
        {"fp17_3", k_fp17_3},
        {"fp17_4", k_fp17_4},
        {"fp14a", k_fp14a},
        {"regular", k_regular},
    };
    return all;
}

const Fixture* find_fixture(const std::string& name) {
    for (const auto& f : bundled_fixtures())
        if (f.name == name) return &f;
    return nullptr;
}

} // namespace charp
