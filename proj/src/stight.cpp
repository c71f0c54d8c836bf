#include "charp/stight.hpp"

#include "charp/errors.hpp"
#include "charp/util.hpp"

#include <algorithm>

namespace charp {

MultSet MultSet::one() { return MultSet(Kind::one); }

MultSet MultSet::r_circ() { return MultSet(Kind::r_circ); }

MultSet MultSet::complement(std::vector<Ideal> primes) {
    MultSet s(Kind::complement_of_primes);
    for (const auto& q : primes) {
        if (prime_state(q) == TriState::no)
            throw DomainError("complement set: avoided ideal " + q.label() + " is not prime");
    }
    s.primes_ = std::move(primes);
    return s;
}

MultSet MultSet::powers(Polynomial sigma) {
    if (sigma.is_zero()) throw DomainError("powers set: zero base element");
    MultSet s(Kind::powers_of);
    s.sigma_ = std::move(sigma);
    return s;
}

const std::vector<Ideal>& MultSet::avoided_primes() const {
    if (kind_ != Kind::complement_of_primes)
        throw DomainError("avoided_primes: not a complement set");
    return primes_;
}

const Polynomial& MultSet::base() const {
    if (kind_ != Kind::powers_of) throw DomainError("base: not a powers set");
    return *sigma_;
}

std::string MultSet::to_string() const {
    switch (kind_) {
    case Kind::one: return "One";
    case Kind::r_circ: return "RCirc";
    case Kind::powers_of: return "powers(" + sigma_->to_string() + ")";
    case Kind::complement_of_primes: {
        std::vector<std::string> parts;
        for (const auto& q : primes_) parts.push_back(q.label());
        return "complement(" + join(parts, "; ") + ")";
    }
    }
    return "?";
}

bool meets(const RingPresentation& pres, const MultSet& s, const Ideal& prime) {
    if (!same_ring(pres.ambient(), prime.ring())) throw DomainError("meets: ring mismatch");
    if (prime.is_unit()) return s.kind() == MultSet::Kind::one; // only (1) contains 1
    if (prime_state(prime) == TriState::no)
        throw DomainError("meets: " + prime.label() + " is not prime");
    switch (s.kind()) {
    case MultSet::Kind::one:
        return false;
    case MultSet::Kind::r_circ:
        for (const auto& q : pres.minimal_primes())
            if (q.contains(prime)) return false;
        return true;
    case MultSet::Kind::complement_of_primes:
        for (const auto& q : s.avoided_primes())
            if (q.contains(prime)) return false;
        return true;
    case MultSet::Kind::powers_of:
        return prime.contains(s.base());
    }
    return false;
}

Ideal s_test_ideal(const RingPresentation& pres, const SpecialIdealLattice& lat,
                   const MultSet& s) {
    Ideal out = Ideal::unit(pres.ambient());
    for (const auto& q : lat.primes)
        if (meets(pres, s, q)) out = intersect(out, q);
    return out.canonical();
}

Ideal big_test_ideal(const RingPresentation& pres, const SpecialIdealLattice& lat) {
    return s_test_ideal(pres, lat, MultSet::r_circ());
}

Polynomial s_test_element(const RingPresentation& pres, const SpecialIdealLattice& lat,
                          const MultSet& s) {
    PrimeList avoid;
    if (s.kind() == MultSet::Kind::r_circ) avoid = pres.minimal_primes();
    else if (s.kind() == MultSet::Kind::complement_of_primes) avoid = s.avoided_primes();
    else throw DomainError("s_test_element needs a prime-complement multiplicative set");
    return prime_avoidance_element(s_test_ideal(pres, lat, s), avoid);
}

Polynomial closure_multiplier(const RingPresentation& pres, const SpecialIdealLattice& lat,
                              const MultSet& s) {
    switch (s.kind()) {
    case MultSet::Kind::one: return Polynomial::constant(pres.ambient(), 1);
    case MultSet::Kind::powers_of: return s.base();
    default: return s_test_element(pres, lat, s);
    }
}

MultSet realize_as_s_test_ideal(const RingPresentation& pres, const SpecialIdealLattice& lat,
                                const Ideal& target) {
    const Ideal t = target.canonical();
    bool member = false;
    for (const auto& b : lat.members)
        if (b.equals(t)) { member = true; break; }
    if (!member) throw DomainError("realize: target is not a lattice member");
    if (t.is_unit()) return MultSet::one();

    // Inclusion-minimal prime members containing the target.
    PrimeList assoc;
    for (const auto& q : lat.primes)
        if (q.contains(t)) assoc.push_back(q);
    PrimeList min_assoc;
    for (const auto& q : assoc) {
        bool minimal = true;
        for (const auto& q2 : assoc)
            if (!q2.equals(q) && q.contains(q2)) { minimal = false; break; }
        if (minimal) min_assoc.push_back(q);
    }

    // Avoid the primes unrelated to every associated prime, plus the maximal
    // primes properly below an associated prime. The remaining primes are
    // exactly those containing the target, so the intersection recovers it.
    std::vector<Ideal> avoid;
    std::vector<Ideal> inside;
    for (const auto& q : lat.primes) {
        bool related = false;
        bool strictly_inside = false;
        for (const auto& p : min_assoc) {
            const bool q_in_p = p.contains(q);
            const bool p_in_q = q.contains(p);
            if (q_in_p && !q.equals(p)) strictly_inside = true;
            if (q_in_p || p_in_q) related = true;
        }
        if (!related) avoid.push_back(q);
        else if (strictly_inside) inside.push_back(q);
    }
    for (const auto& q : inside) {
        bool maximal = true;
        for (const auto& q2 : inside)
            if (!q2.equals(q) && q2.contains(q)) { maximal = false; break; }
        if (maximal) avoid.push_back(q);
    }

    MultSet s = MultSet::complement(std::move(avoid));
    if (!s_test_ideal(pres, lat, s).equals(t))
        throw DomainError("realize: postcondition failed for " + display_label(pres, t));
    return s;
}

std::string to_string(MembershipStatus s) {
    switch (s) {
    case MembershipStatus::member_certified: return "MemberCertified";
    case MembershipStatus::non_member: return "NonMember";
    case MembershipStatus::member_up_to_bound: return "MemberUpToBound";
    }
    return "?";
}

MembershipVerdict tight_closure_membership(const RingPresentation& pres,
                                           const SpecialIdealLattice& lat,
                                           const Polynomial& r, const Ideal& a_test,
                                           const MultSet& s, int levels) {
    if (!same_ring(pres.ambient(), r.ring()) || !same_ring(pres.ambient(), a_test.ring()))
        throw DomainError("membership: ring mismatch");
    if (levels < 0) throw DomainError("membership: negative level bound");
    if (!pres.is_f_pure()) throw DomainError("membership requires an F-pure presentation");

    const Ideal at = (a_test + pres.defining_ideal()).canonical();
    MembershipVerdict v{MembershipStatus::member_certified, -1, -1, std::nullopt, ""};
    if (at.contains(r)) {
        v.reason = "r lies in a_test, and a_test sits inside its own closure";
        return v;
    }

    const Polynomial mult = closure_multiplier(pres, lat, s);
    v.certificate = mult;

    const bool monomial_data =
        (pres.defining_ideal().is_zero() || pres.defining_ideal().is_monomial()) &&
        at.is_monomial() && r.terms().size() == 1;
    int last = levels;
    if (monomial_data) {
        // Once p^j exceeds every exponent of the multiplier, the per-term
        // divisibility pattern against a_test^[p^j] + a is independent of j,
        // so checking through that level decides all levels.
        std::int64_t maxw = 0;
        for (const auto& t : mult.terms())
            for (std::size_t k = 0; k < t.mono.nvars(); ++k)
                maxw = std::max(maxw, t.mono.exponent(k));
        int j0 = 0;
        for (std::int64_t q = 1; q <= maxw; q *= pres.p()) ++j0;
        last = std::max(levels, j0);
    }

    for (int j = 0; j <= last; ++j) {
        const Ideal lvl = pres.level_ideal(at, j);
        if (!lvl.contains(mult * frobenius_pow_poly(r, j))) {
            v.status = MembershipStatus::non_member;
            v.witness_level = j;
            v.reason = "level " + std::to_string(j) +
                       " obstruction: s*r^(p^j) escapes a_test^[p^j] + a";
            return v;
        }
    }
    if (monomial_data) {
        v.status = MembershipStatus::member_certified;
        v.reason = "levels 0.." + std::to_string(last) +
                   " pass and the divisibility pattern is stable from level " +
                   std::to_string(last) + " on";
        return v;
    }
    v.status = MembershipStatus::member_up_to_bound;
    v.bound = levels;
    v.reason = "levels 0.." + std::to_string(levels) +
               " verified; no stabilization certificate for non-monomial data";
    return v;
}

IdealChain test_ideal_chain(const RingPresentation& pres, const SpecialIdealLattice& lat,
                            int max_steps) {
    if (!pres.is_f_pure()) throw DomainError("test ideal chain requires an F-pure presentation");
    IdealChain out;
    out.notes.push_back("chain steps are reported as both the test ideal and the big test ideal;"
                        " the identification is validated only on the bundled data");
    out.steps.push_back(pres.defining_ideal());
    out.labels.push_back(display_label(pres, pres.defining_ideal()));

    std::optional<RingPresentation> hold;
    std::optional<SpecialIdealLattice> lhold;
    const RingPresentation* cur = &pres;
    const SpecialIdealLattice* curlat = &lat;
    for (int step = 0; step < max_steps; ++step) {
        Ideal t = big_test_ideal(*cur, *curlat);
        const Ideal& prev = out.steps.back();
        if (!t.contains(prev) || t.equals(prev))
            throw DomainError("test ideal chain failed to ascend strictly at " +
                              display_label(pres, prev));
        bool in_lattice = false;
        for (const auto& b : lat.members)
            if (b.equals(t)) { in_lattice = true; break; }
        if (!in_lattice)
            throw DomainError("chain step " + display_label(pres, t) +
                              " escapes the special ideal lattice");
        out.steps.push_back(t);
        out.labels.push_back(display_label(pres, t));
        if (t.is_unit()) return out;

        hold.emplace(pres.ambient(), t, pres.options());
        if (!hold->is_f_pure())
            throw DomainError("chain quotient at " + display_label(pres, t) +
                              " has no purity certificate");
        for (const auto& w : hold->warnings())
            out.notes.push_back("at " + display_label(pres, t) + ": " + w);
        lhold.emplace(special_ideal_lattice(*hold));
        cur = &*hold;
        curlat = &*lhold;
    }
    throw ResourceLimitError("test ideal chain exceeded the step budget");
}

std::string render_chain(const IdealChain& chain) { return join(chain.labels, " < "); }

} // namespace charp
