#pragma once

#include "charp/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace charp {

// Reduced Groebner basis: monic, fully interreduced, sorted ascending by
// leading monomial. Unique for a given ideal and order, so equality of bases
// is equality of ideals.
struct GroebnerBasis {
    Ring ring;
    std::vector<Polynomial> gens;
};

// Process-wide default for the Buchberger pair budget; exceeding the budget
// raises ResourceLimitError.
std::int64_t default_pair_budget();
void set_default_pair_budget(std::int64_t budget);

// Buchberger with the product and chain criteria and normal pair selection
// (minimal lcm degree, ties by order then index). Monomial generator sets
// short-circuit to minimal monomial generators. pair_budget < 0 means the
// process default.
GroebnerBasis groebner_basis(const Ring& ring, const std::vector<Polynomial>& gens,
                             std::int64_t pair_budget = -1);

// Remainder of full reduction: no term of the result is divisible by any
// leading monomial of the divisor list. Deterministic divisor choice.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

bool ideal_member(const Polynomial& f, const GroebnerBasis& basis);

} // namespace charp
