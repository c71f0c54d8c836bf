#pragma once

#include "charp/ideal.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace charp {

struct PresentationOptions {
    // Refuse a defining ideal that is known non-radical; warn when unknown.
    bool check_radical = true;
    // Extra star-closure seeds for the lattice search over non-monomial data.
    std::vector<Ideal> seeds;
};

// Quotient presentation R = A/a with A = F_p[x_1..x_n] graded local at
// m = (x_1, ..., x_n). Precomputes the Frobenius colon ideal C = (a^[p] : a)
// and a purity certificate u in C \ m^[p] when one exists.
class RingPresentation {
public:
    RingPresentation(Ring ring, Ideal a, PresentationOptions opts = {});

    const Ring& ambient() const noexcept { return ring_; }
    const Ideal& defining_ideal() const noexcept { return a_; }
    const Ideal& max_ideal() const noexcept { return m_; }
    const Ideal& colon_ideal() const noexcept { return colon_; }
    std::int64_t p() const noexcept { return ring_->p.value(); }

    // R is F-pure exactly when C is not contained in m^[p].
    bool is_f_pure() const noexcept { return u_.has_value(); }
    // Least-degree reduced-basis generator of C outside m^[p]; degree ties go
    // to the term-order-least generator.
    const std::optional<Polynomial>& certificate() const noexcept { return u_; }

    // Level-n truncation ideal of a_test in this presentation:
    // a_test^[p^n] + a. Note the defining ideal enters without a Frobenius
    // power; the levels present the quotients R/(a_test R)^[p^n].
    Ideal level_ideal(const Ideal& a_test, int n) const;

    bool minimal_primes_known() const noexcept { return min_primes_known_; }
    const PrimeList& minimal_primes() const; // DomainError when unknown

    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    const PresentationOptions& options() const noexcept { return opts_; }

private:
    Ring ring_;
    Ideal a_;
    Ideal m_;
    Ideal colon_;
    std::optional<Polynomial> u_;
    PrimeList min_primes_;
    bool min_primes_known_ = false;
    std::vector<std::string> warnings_;
    PresentationOptions opts_;
};

// yes: certainly prime; no: certainly not prime; unknown otherwise. Over a
// field, a monomial ideal is prime exactly when variables generate it, and
// the zero ideal of the ambient polynomial ring is prime.
TriState prime_state(const Ideal& b);

// Uniform compatibility: C * b is contained in b^[p], C = (a^[p] : a).
bool is_compatible(const RingPresentation& pres, const Ideal& b);

// Single-multiplier compatibility: u * b is contained in b^[p].
bool is_compatible_for(const Ideal& b, const Polynomial& u);

// Smallest compatible ideal containing b + a: iterate K <- K + (C*K)^{[1/p]}.
// K is a fixed point exactly when C*K is contained in K^[p].
Ideal star_closure(const RingPresentation& pres, const Ideal& b);

struct SpecialIdealLattice {
    std::vector<Ideal> members;  // canonical, deduplicated, sorted
    PrimeList primes;            // the prime members, same sort
    // Cover relations (i, j): members[i] strictly inside members[j] with no
    // member strictly between.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<Ideal> candidate_basis; // seeds used by the non-exhaustive search
    std::vector<std::string> warnings;
    bool exhaustive = false;
};

struct LatticeOptions {
    std::size_t member_cap = 4096;
    // When set, filter by u*b in b^[p] instead of uniform compatibility.
    std::optional<Polynomial> single_u;
};

// The compatible ideals containing a, closed under sum and intersection.
// Monomial defining ideals get an exhaustive face-prime enumeration; other
// data is explored from a candidate family and flagged non-exhaustive.
SpecialIdealLattice special_ideal_lattice(const RingPresentation& pres,
                                          const LatticeOptions& opt = {});

// Structural re-check of a computed lattice; returns violation descriptions.
std::vector<std::string> verify_lattice(const RingPresentation& pres,
                                        const SpecialIdealLattice& lat,
                                        const LatticeOptions& opt = {});

// "0" for the defining ideal, "m" for the irrelevant maximal ideal, "R" for
// the unit ideal, otherwise the reduced-basis label.
std::string display_label(const RingPresentation& pres, const Ideal& b);

} // namespace charp
