#include "charp/frobpure.hpp"

#include "charp/errors.hpp"
#include "charp/groebner.hpp"
#include "charp/util.hpp"

#include <algorithm>
#include <numeric>

namespace charp {

namespace {

Ideal all_variables(const Ring& r) {
    std::vector<std::size_t> idx(r->nvars());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return Ideal::of_variables(r, idx);
}

// Least-degree reduced-basis generator of C outside m^[p]; ties by term order.
std::optional<Polynomial> pick_certificate(const Ideal& colon_ideal, const Ideal& m) {
    const Ideal mp = frobenius_power(m, 1);
    const GroebnerBasis& mpb = mp.basis();
    std::optional<Polynomial> best;
    for (const auto& g : colon_ideal.basis().gens) {
        if (normal_form(g, mpb).is_zero()) continue;
        if (!best || g.total_degree() < best->total_degree() ||
            (g.total_degree() == best->total_degree() &&
             compare(g, *best) == std::strong_ordering::less)) {
            best = g;
        }
    }
    return best;
}

} // namespace

TriState prime_state(const Ideal& b) {
    if (b.is_unit()) return TriState::no;
    if (b.known_prime()) return TriState::yes;
    if (b.is_zero()) return TriState::yes;
    bool variables_only = true;
    for (const auto& g : b.basis().gens) {
        if (g.terms().size() != 1 || g.terms()[0].mono.degree() != 1) {
            variables_only = false;
            break;
        }
    }
    if (variables_only) return TriState::yes;
    if (b.is_monomial()) return TriState::no;
    return TriState::unknown;
}

RingPresentation::RingPresentation(Ring ring, Ideal a, PresentationOptions opts)
    : ring_(std::move(ring)),
      a_(std::move(a)),
      m_(all_variables(ring_)),
      colon_(Ideal::zero(ring_)),
      opts_(std::move(opts)) {
    if (!same_ring(ring_, a_.ring()))
        throw DomainError("presentation: defining ideal lives in a different ring");
    if (a_.is_unit())
        throw DomainError("presentation: defining ideal is the unit ideal");
    a_ = a_.canonical();
    const TriState radical = a_.known_prime() ? TriState::yes : a_.radical_flag();
    if (opts_.check_radical) {
        if (radical == TriState::no)
            throw DomainError("presentation: defining ideal is not radical");
        if (radical == TriState::unknown)
            warnings_.push_back(
                "radical status of the defining ideal is unknown; proceeding as if radical");
    }
    colon_ = colon(frobenius_power(a_, 1), a_).canonical();
    u_ = pick_certificate(colon_, m_);
    if (a_.is_zero()) {
        min_primes_.push_back(Ideal::zero(ring_).with_prime_flag(true));
        min_primes_known_ = true;
    } else if (a_.known_prime()) {
        min_primes_.push_back(a_);
        min_primes_known_ = true;
    } else if (a_.is_monomial()) {
        min_primes_ = minimal_primes_monomial(a_);
        min_primes_known_ = true;
    } else {
        warnings_.push_back(
            "minimal primes unavailable: defining ideal is neither monomial nor declared prime");
    }
}

Ideal RingPresentation::level_ideal(const Ideal& a_test, int n) const {
    if (!same_ring(ring_, a_test.ring())) throw DomainError("level ideal: ring mismatch");
    if (n < 0) throw DomainError("level ideal: negative level");
    return frobenius_power(a_test, n) + a_;
}

const PrimeList& RingPresentation::minimal_primes() const {
    if (!min_primes_known_)
        throw DomainError("minimal primes are not computable for this presentation");
    return min_primes_;
}

bool is_compatible(const RingPresentation& pres, const Ideal& b) {
    if (!same_ring(pres.ambient(), b.ring())) throw DomainError("compatibility: ring mismatch");
    const Ideal bp = frobenius_power(b, 1);
    const GroebnerBasis& bpb = bp.basis();
    for (const auto& c : pres.colon_ideal().basis().gens)
        for (const auto& g : b.basis().gens)
            if (!normal_form(c * g, bpb).is_zero()) return false;
    return true;
}

bool is_compatible_for(const Ideal& b, const Polynomial& u) {
    if (!same_ring(b.ring(), u.ring())) throw DomainError("compatibility: ring mismatch");
    const Ideal bp = frobenius_power(b, 1);
    const GroebnerBasis& bpb = bp.basis();
    for (const auto& g : b.basis().gens)
        if (!normal_form(u * g, bpb).is_zero()) return false;
    return true;
}

Ideal star_closure(const RingPresentation& pres, const Ideal& b) {
    if (!same_ring(pres.ambient(), b.ring())) throw DomainError("star closure: ring mismatch");
    Ideal k = (b + pres.defining_ideal()).canonical();
    const Ideal& c = pres.colon_ideal();
    for (int step = 0; step < 64; ++step) {
        Ideal next = (k + pth_root(c * k)).canonical();
        if (next.equals(k)) return k;
        k = std::move(next);
    }
    throw ResourceLimitError("star closure did not stabilize within 64 steps");
}

std::string display_label(const RingPresentation& pres, const Ideal& b) {
    if (b.is_unit()) return "R";
    if (b.equals(pres.defining_ideal())) return "0";
    if (b.equals(pres.max_ideal())) return "m";
    return b.label();
}

SpecialIdealLattice special_ideal_lattice(const RingPresentation& pres,
                                          const LatticeOptions& opt) {
    const Ring& ring = pres.ambient();
    const Ideal& a = pres.defining_ideal();

    auto compatible = [&](const Ideal& b) {
        return opt.single_u ? is_compatible_for(b, *opt.single_u) : is_compatible(pres, b);
    };

    SpecialIdealLattice lat;
    std::vector<Ideal> members;
    auto index_of = [&](const Ideal& x) -> std::ptrdiff_t {
        for (std::size_t i = 0; i < members.size(); ++i)
            if (members[i].equals(x)) return static_cast<std::ptrdiff_t>(i);
        return -1;
    };
    auto add = [&](const Ideal& x) -> bool {
        Ideal c = x.canonical();
        if (index_of(c) >= 0) return false;
        if (members.size() >= opt.member_cap)
            throw ResourceLimitError("special ideal lattice exceeded the member cap");
        members.push_back(std::move(c));
        return true;
    };

    add(a);
    add(Ideal::unit(ring));

    const bool monomial_case = a.is_zero() || a.is_monomial();
    if (monomial_case) {
        // Exhaustive scan: a compatible prime of a monomial presentation is a
        // face prime, and every member is an intersection of compatible primes.
        const std::size_t n = ring->nvars();
        if (n > 24) throw ResourceLimitError("face prime enumeration limited to 24 variables");
        std::vector<std::uint32_t> supports;
        for (const auto& g : a.basis().gens) {
            std::uint32_t s = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (g.leading_term().mono.exponent(k) > 0) s |= std::uint32_t{1} << k;
            supports.push_back(s);
        }
        std::vector<Ideal> candidates;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
            bool covers = true;
            for (auto s : supports)
                if ((s & mask) == 0) { covers = false; break; }
            if (!covers) continue;
            std::vector<std::size_t> idx;
            for (std::size_t k = 0; k < n; ++k)
                if (mask & (std::uint32_t{1} << k)) idx.push_back(k);
            candidates.push_back(Ideal::of_variables(ring, idx));
        }
        pres.colon_ideal().basis(); // warm the shared cache before the parallel scan
        std::vector<char> keep(candidates.size(), 0);
        parallel_for(candidates.size(),
                     [&](std::size_t i) { keep[i] = compatible(candidates[i]) ? 1 : 0; });
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (keep[i]) add(candidates[i]);
        lat.exhaustive = true;
    } else {
        std::vector<Ideal> seeds;
        if (pres.minimal_primes_known())
            for (const auto& q : pres.minimal_primes()) seeds.push_back(q);
        seeds.push_back(pres.max_ideal());
        for (std::size_t k = 0; k < ring->nvars(); ++k)
            seeds.push_back(Ideal(ring, {Polynomial::variable(ring, k)}));
        for (const auto& s : pres.options().seeds) seeds.push_back(s);

        for (const auto& s : seeds) {
            Ideal k = star_closure(pres, s);
            bool seen = false;
            for (const auto& c : lat.candidate_basis)
                if (c.equals(k)) { seen = true; break; }
            if (!seen) lat.candidate_basis.push_back(k);
            if (k.contains(a) && compatible(k)) add(k);
        }
        lat.warnings.push_back(
            "lattice computed from a finite candidate family; it may be a proper sublattice");
        lat.exhaustive = false;
    }

    // Close under sum and intersection; both preserve compatibility. Over
    // non-monomial data, also split monomial members into their minimal
    // primes, which stay compatible.
    bool grew = true;
    while (grew) {
        grew = false;
        const std::size_t sz = members.size();
        for (std::size_t i = 0; i < sz; ++i) {
            for (std::size_t j = i + 1; j < sz; ++j) {
                if (add(intersect(members[i], members[j]))) grew = true;
                if (add(members[i] + members[j])) grew = true;
            }
        }
        if (!monomial_case) {
            const std::size_t sz2 = members.size();
            for (std::size_t i = 0; i < sz2; ++i) {
                const Ideal b = members[i];
                if (!b.is_monomial() || b.is_unit() || prime_state(b) == TriState::yes)
                    continue;
                for (const auto& q : minimal_primes_monomial(b))
                    if (compatible(q) && add(q)) grew = true;
            }
        }
    }

    std::sort(members.begin(), members.end(), [](const Ideal& x, const Ideal& y) {
        return compare(x, y) == std::strong_ordering::less;
    });
    lat.members = std::move(members);

    std::vector<std::string> unclassified;
    for (const auto& b : lat.members) {
        const TriState s = prime_state(b);
        if (s == TriState::yes) lat.primes.push_back(b);
        else if (s == TriState::unknown) unclassified.push_back(display_label(pres, b));
    }
    if (!unclassified.empty())
        lat.warnings.push_back("members with undetermined primality treated as non-prime: " +
                               join(unclassified, ", "));

    // Cover relations. Members are deduplicated, so containment at distinct
    // indices is strict.
    const std::size_t n = lat.members.size();
    std::vector<std::vector<char>> below(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && lat.members[j].contains(lat.members[i])) below[i][j] = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!below[i][j]) continue;
            bool cover = true;
            for (std::size_t k = 0; k < n; ++k)
                if (below[i][k] && below[k][j]) { cover = false; break; }
            if (cover) lat.edges.emplace_back(i, j);
        }
    }
    return lat;
}

std::vector<std::string> verify_lattice(const RingPresentation& pres,
                                        const SpecialIdealLattice& lat,
                                        const LatticeOptions& opt) {
    std::vector<std::string> out;
    auto compatible = [&](const Ideal& b) {
        return opt.single_u ? is_compatible_for(b, *opt.single_u) : is_compatible(pres, b);
    };
    auto found = [&](const Ideal& x) {
        for (const auto& mem : lat.members)
            if (mem.equals(x)) return true;
        return false;
    };
    const Ideal& a = pres.defining_ideal();
    if (!found(a)) out.push_back("defining ideal is missing from the lattice");
    if (!found(Ideal::unit(pres.ambient()))) out.push_back("unit ideal is missing from the lattice");
    for (const auto& b : lat.members) {
        if (!b.contains(a))
            out.push_back(display_label(pres, b) + " does not contain the defining ideal");
        if (!compatible(b)) out.push_back(display_label(pres, b) + " is not compatible");
    }
    for (std::size_t i = 0; i < lat.members.size(); ++i) {
        for (std::size_t j = i + 1; j < lat.members.size(); ++j) {
            if (!found(intersect(lat.members[i], lat.members[j])))
                out.push_back("intersection escapes the lattice: " +
                              display_label(pres, lat.members[i]) + " with " +
                              display_label(pres, lat.members[j]));
            if (!found(lat.members[i] + lat.members[j]))
                out.push_back("sum escapes the lattice: " +
                              display_label(pres, lat.members[i]) + " with " +
                              display_label(pres, lat.members[j]));
        }
    }
    for (const auto& q : lat.primes) {
        if (!found(q)) out.push_back("prime " + display_label(pres, q) + " is not a member");
        if (prime_state(q) == TriState::no)
            out.push_back(display_label(pres, q) + " is listed prime but provably is not");
    }
    return out;
}

} // namespace charp
