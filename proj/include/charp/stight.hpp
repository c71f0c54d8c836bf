#pragma once

#include "charp/frobpure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace charp {

// A multiplicative subset of R used to weight the closure operation: {1},
// R-circ (complement of the union of minimal primes), the complement of a
// finite prime family, or the powers of a fixed element.
class MultSet {
public:
    enum class Kind { one, r_circ, complement_of_primes, powers_of };

    static MultSet one();
    static MultSet r_circ();
    static MultSet complement(std::vector<Ideal> primes);
    static MultSet powers(Polynomial sigma);

    Kind kind() const noexcept { return kind_; }
    const std::vector<Ideal>& avoided_primes() const; // complement kind only
    const Polynomial& base() const;                   // powers kind only
    std::string to_string() const;

private:
    explicit MultSet(Kind k) : kind_(k) {}
    Kind kind_;
    std::vector<Ideal> primes_;
    std::optional<Polynomial> sigma_;
};

// Does S meet the prime? One meets only the unit ideal; R-circ meets p when
// p escapes every minimal prime; a complement set meets p when p escapes
// each avoided prime; powers(sigma) meet p exactly when sigma lies in p.
bool meets(const RingPresentation& pres, const MultSet& s, const Ideal& prime);

// Intersection of the prime lattice members met by S; unit when none are.
Ideal s_test_ideal(const RingPresentation& pres, const SpecialIdealLattice& lat,
                   const MultSet& s);

// s_test_ideal at S = R-circ: the smallest positive-height member.
Ideal big_test_ideal(const RingPresentation& pres, const SpecialIdealLattice& lat);

// An element of S meeting the S-test ideal, found by prime avoidance.
// Restricted to the r_circ and complement kinds; One and powers carry their
// own candidate (see closure_multiplier).
Polynomial s_test_element(const RingPresentation& pres, const SpecialIdealLattice& lat,
                          const MultSet& s);

// The multiplier used to test S-weighted closure levels: 1 for One, sigma
// for powers(sigma), otherwise s_test_element. Each lies in S intersected
// with the S-test ideal, so a level failure is a certified exclusion.
Polynomial closure_multiplier(const RingPresentation& pres, const SpecialIdealLattice& lat,
                              const MultSet& s);

// Inverse problem: a multiplicative set S with s_test_ideal(S) == target.
// The postcondition is re-checked; a mismatch raises DomainError.
MultSet realize_as_s_test_ideal(const RingPresentation& pres, const SpecialIdealLattice& lat,
                                const Ideal& target);

enum class MembershipStatus { member_certified, non_member, member_up_to_bound };
std::string to_string(MembershipStatus s);

struct MembershipVerdict {
    MembershipStatus status;
    int witness_level = -1; // first failing level when status is non_member
    int bound = -1;         // levels verified when only a bound is known
    std::optional<Polynomial> certificate; // multiplier witnessing the verdict
    std::string reason;
};

// Does r lie in the S-weighted closure of a_test, taken inside R = A/a?
// Level j checks s * r^(p^j) against a_test^[p^j] + a. Exclusion at any level
// is certified; membership is certified for r in a_test and for monomial
// data, where divisibility patterns stabilize; otherwise the verdict carries
// the level bound it was checked to.
MembershipVerdict tight_closure_membership(const RingPresentation& pres,
                                           const SpecialIdealLattice& lat,
                                           const Polynomial& r, const Ideal& a_test,
                                           const MultSet& s, int levels = 5);

struct IdealChain {
    std::vector<Ideal> steps;        // strictly ascending, defining ideal up to (1)
    std::vector<std::string> labels; // display labels in the starting presentation
    std::vector<std::string> notes;
};

// Iterated big test ideals: each step re-presents A over the previous step's
// ideal, requires a fresh purity certificate, and takes the quotient's big
// test ideal. Every step must already lie in the starting lattice.
IdealChain test_ideal_chain(const RingPresentation& pres, const SpecialIdealLattice& lat,
                            int max_steps = 16);

std::string render_chain(const IdealChain& chain); // "0 < m < R"

} // namespace charp
