#pragma once

#include "charp/groebner.hpp"
#include "charp/util.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace charp {

// Finitely generated ideal of the ambient ring. Value-semantic; the reduced
// Groebner basis is computed once per ideal and shared (write-once cache).
class Ideal {
public:
    Ideal(Ring ring, std::vector<Polynomial> gens);

    static Ideal zero(Ring ring);
    static Ideal unit(Ring ring);
    // prime ideal generated by a subset of the variables
    static Ideal of_variables(Ring ring, const std::vector<std::size_t>& idxs);

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& gens() const noexcept { return gens_; }

    const GroebnerBasis& basis() const; // cached; thread-safe

    bool is_monomial() const noexcept { return monomial_; }
    bool is_homogeneous() const noexcept { return homogeneous_; }
    bool known_prime() const noexcept { return known_prime_; }
    TriState radical_flag() const;

    bool is_zero() const { return basis().gens.empty(); }
    bool is_unit() const;
    bool contains(const Polynomial& f) const;
    bool contains(const Ideal& other) const;
    bool equals(const Ideal& other) const;

    // same ideal, generated by its reduced Groebner basis
    Ideal canonical() const;
    // canonical polynomial strings of the reduced basis, descending order
    std::vector<std::string> serialize() const;
    std::string label() const; // "(f1, f2, ...)", "(0)", "(1)"

    Ideal with_prime_flag(bool known_prime) const;
    Ideal with_radical_flag(TriState r) const;

private:
    struct Cache;
    Ring ring_;
    std::vector<Polynomial> gens_; // zeros dropped, sorted descending
    bool monomial_ = false;
    bool homogeneous_ = false;
    bool known_prime_ = false;
    TriState declared_radical_ = TriState::unknown;
    std::shared_ptr<Cache> cache_;
};

using PrimeList = std::vector<Ideal>;

// Total order on ideals of one ring: lexicographic over the reduced bases.
std::strong_ordering compare(const Ideal& a, const Ideal& b);

Ideal operator+(const Ideal& a, const Ideal& b);
Ideal operator*(const Ideal& a, const Ideal& b);
Ideal multiply(const Polynomial& f, const Ideal& a);

// I cap J. Monomial ideals use pairwise lcms; the general case eliminates one
// auxiliary variable t from t*I + (1-t)*J under a block order.
Ideal intersect(const Ideal& a, const Ideal& b);

// (I : f) and (I : J)
Ideal colon(const Ideal& a, const Polynomial& f);
Ideal colon(const Ideal& a, const Ideal& b);

// I^[p^e]: generated by the p^e-th powers of any generating set
Ideal frobenius_power(const Ideal& a, std::int64_t e);

// smallest K with J subset of K^[p], via the direct-sum decomposition of the
// ambient ring over its subring of p-th powers
Ideal pth_root(const Ideal& j);

// minimal primes of a monomial ideal: minimal vertex covers of the generator
// supports; every such prime is generated by variables
PrimeList minimal_primes_monomial(const Ideal& a);

// a deterministic element of a outside every listed prime; searches F_p
// combinations of the generators, then of generators extended by pairwise
// products. Throws DomainError when the search is exhausted.
Polynomial prime_avoidance_element(const Ideal& a, const PrimeList& avoid);

// true when b is the unit ideal or contained in no minimal prime
bool has_positive_height(const Ideal& b, const PrimeList& minimal_primes);

} // namespace charp
