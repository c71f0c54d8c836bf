#pragma once

#include "charp/stight.hpp"

#include <vector>

namespace charp {

// One class of the truncated skew module: a normal-form representative at a level.
struct SkewElement {
    int level = 0;
    Polynomial rep;
};

// Truncation of the quotient tower whose level n is the ambient ring modulo
// frobenius_power(a_test, n) + a, for n = 0..N. Each level carries the reduced
// level ideal and the standard monomials of degree <= D against its Groebner
// basis. The x-map sends a class at level n to the class of its p-th power at
// level n+1; it is additive and p-semilinear.
class SkewTruncation {
public:
    SkewTruncation(RingPresentation pres, Ideal a_test, int levels = 4, int degree_cap = 6);

    const RingPresentation& presentation() const noexcept { return pres_; }
    const Ideal& test_ideal() const noexcept { return a_test_; }
    int levels() const noexcept { return levels_; }
    int degree_cap() const noexcept { return degree_cap_; }
    std::int64_t p() const { return pres_.p(); }

    const Ideal& level_ideal(int n) const;
    const std::vector<Monomial>& level_basis(int n) const;

    // Normal form of h against the level's Groebner basis.
    Polynomial reduce(const Polynomial& h, int n) const;
    // Class of h^p at level n+1, for h a class at level n.
    Polynomial x_map(const Polynomial& h, int n) const;
    // k-fold x-map, landing at level n+k.
    Polynomial x_power(const Polynomial& h, int n, int k) const;

private:
    RingPresentation pres_;
    Ideal a_test_;
    int levels_;
    int degree_cap_;
    std::vector<Ideal> level_ideals_;
    std::vector<std::vector<Monomial>> bases_;
};

// Basis of a subspace of one level's capped quotient; reps are normal forms
// over that level's standard monomials, reduced-echelon canonical.
struct SubspaceBasis {
    std::vector<Polynomial> reps;
    std::size_t dimension() const noexcept { return reps.size(); }
};

// Per-level x-torsion of the truncation: at level l, the classes killed by
// x^(N-l). The zero class is always torsion; the bases list the nonzero
// directions, so an x-torsion-free level reports an empty basis. Exact on the
// truncation only: torsion first visible past level N is out of reach.
std::vector<SubspaceBasis> gamma_x(const SkewTruncation& t);

struct DeltaResult {
    Polynomial certificate;
    SubspaceBasis space;
};

// Level-0 classes h with candidate * x^n(h) = 0 at every level n = 0..N,
// together with the candidate used. The candidate must be a genuine S-test
// element (or the set's own base), for which vanishing from some level on
// already forces vanishing from level 0 on, so the window starts at 0.
DeltaResult delta_s_truncated(const SkewTruncation& t, const Polynomial& candidate);
// Convenience: derives the candidate from the multiplicative set via the
// closure multiplier of the truncation's presentation.
DeltaResult delta_s_truncated(const SkewTruncation& t, const SpecialIdealLattice& lat,
                              const MultSet& s);

// Whether the class of h at the level lies in the span of the basis.
bool contains(const SkewTruncation& t, int level, const SubspaceBasis& space,
              const Polynomial& h);

// Per-level annihilators of an x-stable family: b_n collects the ring elements
// r with r x^n killing every element. The input family is closed under the
// x-map first, which makes the reported sequence ascend.
struct GradedAnnihilatorDatum {
    std::vector<Ideal> levels;
};
GradedAnnihilatorDatum graded_annihilator(const SkewTruncation& t,
                                          const std::vector<SkewElement>& elements);

} // namespace charp
