#include "charp/selfcheck.hpp"

#include "charp/errors.hpp"
#include "charp/parse.hpp"
#include "charp/skewmod.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace charp {
namespace {

struct Fx {
    std::string name;
    RingPresentation pres;
    SpecialIdealLattice lat;
};

Fx make_fixture(std::string name, std::int64_t p, std::vector<std::string> vars,
                const std::vector<std::string>& gens, bool prime_flag) {
    Ring ring = make_ring(p, std::move(vars));
    std::vector<Polynomial> gs;
    gs.reserve(gens.size());
    for (const auto& g : gens) gs.push_back(parse_polynomial(g, ring));
    Ideal a(ring, std::move(gs));
    if (prime_flag) a = a.with_prime_flag(true);
    RingPresentation pres(ring, a);
    SpecialIdealLattice lat = special_ideal_lattice(pres);
    return Fx{std::move(name), std::move(pres), std::move(lat)};
}

std::vector<Fx> build_fixtures() {
    std::vector<Fx> out;
    out.push_back(make_fixture("fp17_1", 2, {"X", "Y", "Z"}, {"X*Y", "X*Z", "Y*Z"}, false));
    out.push_back(make_fixture("fp17_2", 2, {"X", "Y", "Z", "W"},
                               {"X*Y*Z", "X*Y*W", "X*Z*W", "Y*Z*W"}, false));
    out.push_back(make_fixture("fp17_3", 2, {"X", "Y", "Z"}, {"X*Y", "Y*Z"}, false));
    out.push_back(make_fixture("fp17_4", 2, {"X", "Y", "Z", "W"}, {"X*Y", "Z*W"}, false));
    out.push_back(make_fixture("fp14a", 7, {"X", "Y", "Z"}, {"X^3 + Y^3 + Z^3"}, true));
    out.push_back(make_fixture("regular", 2, {"X"}, {}, false));
    return out;
}

const Fx& get(const std::vector<Fx>& fixtures, const std::string& name) {
    for (const auto& f : fixtures)
        if (f.name == name) return f;
    throw DomainError("missing fixture " + name);
}

bool same_prime_set(const PrimeList& got, std::vector<Ideal> want) {
    if (got.size() != want.size()) return false;
    std::vector<Ideal> g(got.begin(), got.end());
    auto lt = [](const Ideal& a, const Ideal& b) { return compare(a, b) < 0; };
    std::sort(g.begin(), g.end(), lt);
    std::sort(want.begin(), want.end(), lt);
    for (std::size_t i = 0; i < g.size(); ++i)
        if (!g[i].equals(want[i])) return false;
    return true;
}

bool has_prime(const PrimeList& got, const Ideal& want) {
    for (const auto& q : got)
        if (q.equals(want)) return true;
    return false;
}

// Deterministic small samplers; plain modulo keeps the stream identical
// across standard libraries.
std::size_t pick(std::mt19937& rng, std::size_t n) { return std::size_t(rng() % n); }

Polynomial random_poly(std::mt19937& rng, const Ring& ring, int max_deg) {
    const std::int64_t p = ring->p.value();
    for (int attempt = 0; attempt < 64; ++attempt) {
        Polynomial f = Polynomial::constant(ring, 0);
        const std::size_t nterms = 1 + pick(rng, 3);
        for (std::size_t t = 0; t < nterms; ++t) {
            const int d = int(pick(rng, std::size_t(max_deg) + 1));
            Polynomial term =
                Polynomial::constant(ring, 1 + std::int64_t(pick(rng, std::size_t(p - 1))));
            for (int j = 0; j < d; ++j)
                term = term * Polynomial::variable(ring, pick(rng, ring->nvars()));
            f = f + term;
        }
        if (!f.is_zero()) return f;
    }
    return Polynomial::constant(ring, 1);
}

Ideal random_ideal(std::mt19937& rng, const Ring& ring, int max_gens, int max_deg) {
    std::vector<Polynomial> gs;
    const std::size_t k = 1 + pick(rng, std::size_t(max_gens));
    for (std::size_t i = 0; i < k; ++i) gs.push_back(random_poly(rng, ring, max_deg));
    return Ideal(ring, std::move(gs));
}

std::string check_two_step_chain(const Fx& f) {
    IdealChain ch = test_ideal_chain(f.pres, f.lat);
    std::string r = render_chain(ch);
    if (r != "0 < m < R") return "chain " + r;
    return {};
}

// Shared by the two four-variable fixtures: both collapse through the ideal
// of all coordinate products on the way to m.
std::string check_four_step_chain(const Fx& f) {
    const Ring& ring = f.pres.ambient();
    std::vector<Polynomial> mid_gens;
    for (const char* t : {"X*Y", "X*Z", "X*W", "Y*Z", "Y*W", "Z*W"})
        mid_gens.push_back(parse_polynomial(t, ring));
    Ideal mid(ring, std::move(mid_gens));

    IdealChain ch = test_ideal_chain(f.pres, f.lat);
    if (ch.steps.size() != 4) return "chain has " + std::to_string(ch.steps.size()) + " steps";
    if (!ch.steps[0].equals(f.pres.defining_ideal())) return "chain does not start at 0";
    if (!ch.steps[1].equals(mid)) return "second step is " + ch.steps[1].label();
    if (!ch.steps[2].equals(f.pres.max_ideal())) return "third step is " + ch.steps[2].label();
    if (!ch.steps[3].is_unit()) return "chain does not end at R";
    std::string r = render_chain(ch);
    if (r != "0 < (X*Y, X*Z, Y*Z, X*W, Y*W, Z*W) < m < R") return "chain " + r;
    return {};
}

std::string check_prime_cover(const Fx& f, const std::vector<std::vector<std::size_t>>& idx_sets) {
    for (const auto& idxs : idx_sets) {
        Ideal q = Ideal::of_variables(f.pres.ambient(), idxs);
        if (!has_prime(f.lat.primes, q)) return "lattice misses prime " + q.label();
    }
    return {};
}

std::string c_axes(const Fx& f) {
    if (!f.pres.is_f_pure()) return "not certified F-pure";
    const Ring& ring = f.pres.ambient();
    if (!(*f.pres.certificate() == parse_polynomial("X*Y*Z", ring)))
        return "certificate " + f.pres.certificate()->to_string();
    std::vector<Ideal> want = {
        Ideal::of_variables(ring, {0, 1}), Ideal::of_variables(ring, {0, 2}),
        Ideal::of_variables(ring, {1, 2}), Ideal::of_variables(ring, {0, 1, 2})};
    if (!same_prime_set(f.lat.primes, std::move(want))) return "prime set mismatch";
    if (f.lat.members.size() != 9)
        return "member count " + std::to_string(f.lat.members.size());
    return check_two_step_chain(f);
}

std::string c_plane_line(const Fx& f) {
    const Ring& ring = f.pres.ambient();
    std::vector<Ideal> want = {Ideal::of_variables(ring, {0, 2}), Ideal::of_variables(ring, {1}),
                               Ideal::of_variables(ring, {0, 1, 2})};
    if (!same_prime_set(f.lat.primes, std::move(want))) return "prime set mismatch";
    if (f.lat.members.size() != 5)
        return "member count " + std::to_string(f.lat.members.size());
    return check_two_step_chain(f);
}

std::string c_planes(const Fx& f) {
    std::string r = check_four_step_chain(f);
    if (!r.empty()) return r;
    return check_prime_cover(f, {{0, 1},
                                 {0, 2},
                                 {0, 3},
                                 {1, 2},
                                 {1, 3},
                                 {2, 3},
                                 {0, 1, 2},
                                 {0, 1, 3},
                                 {0, 2, 3},
                                 {1, 2, 3},
                                 {0, 1, 2, 3}});
}

std::string c_quadrics(const Fx& f) {
    std::string r = check_four_step_chain(f);
    if (!r.empty()) return r;
    return check_prime_cover(f, {{0, 2},
                                 {0, 3},
                                 {1, 2},
                                 {1, 3},
                                 {0, 1, 2},
                                 {0, 1, 3},
                                 {0, 2, 3},
                                 {1, 2, 3},
                                 {0, 1, 2, 3}});
}

std::string c_cubic(const Fx& f) {
    if (!f.pres.is_f_pure()) return "not certified F-pure";
    std::vector<Ideal> want = {f.pres.defining_ideal(), f.pres.max_ideal()};
    if (!same_prime_set(f.lat.primes, std::move(want))) return "prime set mismatch";
    Ideal tau = big_test_ideal(f.pres, f.lat);
    if (!tau.equals(f.pres.max_ideal())) return "big test ideal " + tau.label();
    return {};
}

std::string c_roundtrip(const std::vector<Fx>& fixtures) {
    for (const auto& f : fixtures) {
        for (const auto& b : f.lat.members) {
            MultSet s = realize_as_s_test_ideal(f.pres, f.lat, b);
            Ideal back = s_test_ideal(f.pres, f.lat, s);
            if (!back.equals(b))
                return f.name + ": " + display_label(f.pres, b) + " realizes to " + s.to_string() +
                       " but returns " + display_label(f.pres, back);
        }
    }
    return {};
}

std::string c_frobenius_trivial(const std::vector<Fx>& fixtures) {
    for (const auto& f : fixtures) {
        if (!f.pres.is_f_pure()) return f.name + ": not F-pure";
        std::mt19937 rng(2026u);
        const Ring& ring = f.pres.ambient();
        int made = 0;
        for (int guard = 0; made < 50; ++guard) {
            if (guard > 4000) return f.name + ": sampler starved on test ideals";
            std::vector<Polynomial> gs = f.pres.defining_ideal().gens();
            const std::size_t extra = 1 + pick(rng, 2);
            for (std::size_t i = 0; i < extra; ++i) gs.push_back(random_poly(rng, ring, 3));
            Ideal a_test = Ideal(ring, std::move(gs)).canonical();
            if (a_test.is_unit()) continue;
            ++made;
            int found = 0;
            for (int rguard = 0; found < 20; ++rguard) {
                if (rguard > 4000) return f.name + ": sampler starved on outside elements";
                Polynomial r = random_poly(rng, ring, 3);
                if (a_test.contains(r)) continue;
                ++found;
                MembershipVerdict v =
                    tight_closure_membership(f.pres, f.lat, r, a_test, MultSet::one(), 4);
                if (v.status != MembershipStatus::non_member || v.witness_level < 0 ||
                    v.witness_level > 4)
                    return f.name + ": " + r.to_string() + " against " + a_test.label() +
                           " gave " + to_string(v.status);
            }
        }
    }
    return {};
}

bool member_known_radical(const RingPresentation& pres, const Ideal& b) {
    if (b.is_unit()) return true;
    if (prime_state(b) == TriState::yes) return true;
    if (b.radical_flag() == TriState::yes) return true;
    const Ideal& a = pres.defining_ideal();
    if (b.equals(a) && (a.known_prime() || a.radical_flag() == TriState::yes)) return true;
    if (b.is_monomial()) {
        for (const auto& g : b.basis().gens)
            if (g.terms().size() != 1 || !g.terms()[0].mono.is_squarefree()) return false;
        return true;
    }
    return false;
}

std::string lattice_structure(const Fx& f) {
    std::vector<std::string> bad = verify_lattice(f.pres, f.lat);
    if (!bad.empty()) return f.name + ": " + bad.front();
    for (const auto& b : f.lat.members) {
        if (!member_known_radical(f.pres, b))
            return f.name + ": member " + display_label(f.pres, b) + " is not known radical";
        if (b.is_unit()) continue;
        Ideal meet = Ideal::unit(f.pres.ambient());
        for (const auto& q : f.lat.primes)
            if (q.contains(b)) meet = intersect(meet, q);
        if (!meet.equals(b))
            return f.name + ": member " + display_label(f.pres, b) +
                   " is not the intersection of its covering primes";
    }
    return {};
}

std::vector<std::string> sorted_labels(const std::vector<Ideal>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& b : v) out.push_back(b.label());
    std::sort(out.begin(), out.end());
    return out;
}

std::string c_structure(const std::vector<Fx>& fixtures) {
    for (const auto& f : fixtures) {
        std::string r = lattice_structure(f);
        if (!r.empty()) return r;
    }
    // The squarefree monomial lattices carry no characteristic data: the same
    // member sets must appear at p = 2 and p = 3.
    struct M {
        const char* name;
        std::vector<std::string> vars;
        std::vector<std::string> gens;
    };
    const std::vector<M> monomial = {
        {"fp17_1", {"X", "Y", "Z"}, {"X*Y", "X*Z", "Y*Z"}},
        {"fp17_2", {"X", "Y", "Z", "W"}, {"X*Y*Z", "X*Y*W", "X*Z*W", "Y*Z*W"}},
        {"fp17_3", {"X", "Y", "Z"}, {"X*Y", "Y*Z"}},
        {"fp17_4", {"X", "Y", "Z", "W"}, {"X*Y", "Z*W"}},
    };
    for (const auto& m : monomial) {
        Fx at2 = make_fixture(m.name, 2, m.vars, m.gens, false);
        Fx at3 = make_fixture(m.name, 3, m.vars, m.gens, false);
        if (sorted_labels(at2.lat.members) != sorted_labels(at3.lat.members))
            return std::string(m.name) + ": member sets differ between p=2 and p=3";
        if (sorted_labels(at2.lat.primes) != sorted_labels(at3.lat.primes))
            return std::string(m.name) + ": prime sets differ between p=2 and p=3";
    }
    return {};
}

std::string c_cross_module(const Fx& f) {
    const Ring& ring = f.pres.ambient();
    Ideal a_test =
        (Ideal(ring, {parse_polynomial("X + Y", ring)}) + f.pres.defining_ideal()).canonical();
    const MultSet s = MultSet::r_circ();
    const Polynomial x = parse_polynomial("X", ring);

    MembershipVerdict v = tight_closure_membership(f.pres, f.lat, x, a_test, s, 4);
    if (v.status != MembershipStatus::member_up_to_bound || v.bound != 4)
        return "membership of X gave " + to_string(v.status);
    if (!v.certificate || !(*v.certificate == parse_polynomial("X + Y + Z", ring)))
        return "certificate is not X + Y + Z";

    SkewTruncation t(f.pres, a_test, 4, 6);
    DeltaResult d = delta_s_truncated(t, f.lat, s);
    if (d.space.dimension() != 1)
        return "delta dimension " + std::to_string(d.space.dimension());
    if (!contains(t, 0, d.space, x)) return "delta misses X";

    // Exact agreement over every level-0 class of the capped quotient.
    const auto& basis = t.level_basis(0);
    const std::int64_t p = f.pres.p();
    if (basis.size() > 10) return "level-0 basis too large to enumerate";
    std::vector<std::int64_t> digits(basis.size(), 0);
    for (;;) {
        std::vector<Term> terms;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (digits[i] != 0) terms.push_back(Term{basis[i], digits[i]});
        Polynomial h = Polynomial::from_terms(ring, std::move(terms));
        bool member =
            tight_closure_membership(f.pres, f.lat, h, a_test, s, 4).status !=
            MembershipStatus::non_member;
        bool in_delta = contains(t, 0, d.space, h);
        if (member != in_delta)
            return "class " + h.to_string() + ": membership " + (member ? "yes" : "no") +
                   ", delta " + (in_delta ? "yes" : "no");
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
        if (i == digits.size()) break;
    }
    return {};
}

std::string c_adjunction_semilinearity() {
    for (std::int64_t p : {2, 3}) {
        Ring ring = make_ring(p, {"X", "Y", "Z"});
        std::mt19937 rng(std::uint32_t(1000 + p));
        for (int i = 0; i < 100; ++i) {
            Ideal j = random_ideal(rng, ring, 3, 3);
            Ideal k = random_ideal(rng, ring, 3, 2);
            Ideal root = pth_root(j);
            bool below = k.contains(root);
            bool inside = frobenius_power(k, 1).contains(j);
            if (below != inside)
                return "adjunction mismatch at p=" + std::to_string(p) + ": J=" + j.label() +
                       ", K=" + k.label();
            if (!frobenius_power(root, 1).contains(j))
                return "root bound fails at p=" + std::to_string(p) + ": J=" + j.label();
            if (!pth_root(frobenius_power(k, 1)).equals(k.canonical()))
                return "root of power is not identity at p=" + std::to_string(p) +
                       ": K=" + k.label();
        }
    }
    for (std::int64_t p : {2, 3}) {
        Ring ring = make_ring(p, {"X", "Y", "Z"});
        Ideal a(ring, {parse_polynomial("X*Y", ring), parse_polynomial("X*Z", ring),
                       parse_polynomial("Y*Z", ring)});
        RingPresentation pres(ring, a);
        Ideal a_test = (Ideal(ring, {parse_polynomial("X + Y", ring)}) + a).canonical();
        SkewTruncation t(pres, a_test, 3, 5);
        std::mt19937 rng(std::uint32_t(2000 + p));
        for (int i = 0; i < 100; ++i) {
            const int n = int(pick(rng, 3));
            Polynomial h = random_poly(rng, ring, 3);
            Polynomial r = random_poly(rng, ring, 2);
            Polynomial lhs = t.x_map(r * h, n);
            Polynomial rhs = t.reduce(frobenius_pow_poly(r, 1) * t.x_map(h, n), n + 1);
            if (!(lhs == rhs))
                return "x-map is not p-semilinear at p=" + std::to_string(p) +
                       ", level " + std::to_string(n);
        }
    }
    return {};
}

class Tally {
public:
    explicit Tally(std::ostream& out) : out_(out) {}

    void run(const std::string& name, const std::function<std::string()>& body) {
        std::string detail;
        try {
            detail = body();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (detail.empty()) {
            out_ << "PASS " << name << "\n";
        } else {
            out_ << "FAIL " << name << ": " << detail << "\n";
            ++failures_;
        }
        out_.flush();
    }

    int failures() const noexcept { return failures_; }

private:
    std::ostream& out_;
    int failures_ = 0;
};

} // namespace

int run_acceptance(std::ostream& out) {
    Tally tally(out);
    std::vector<Fx> fixtures;
    try {
        fixtures = build_fixtures();
    } catch (const std::exception& e) {
        out << "FAIL fixture construction: " << e.what() << "\n";
        return 10;
    }
    tally.run("fp17_1 purity, primes, chain", [&] { return c_axes(get(fixtures, "fp17_1")); });
    tally.run("fp17_3 primes, chain", [&] { return c_plane_line(get(fixtures, "fp17_3")); });
    tally.run("fp17_2 chain, prime cover", [&] { return c_planes(get(fixtures, "fp17_2")); });
    tally.run("fp17_4 chain, prime cover", [&] { return c_quadrics(get(fixtures, "fp17_4")); });
    tally.run("fp14a purity, primes, big test ideal",
              [&] { return c_cubic(get(fixtures, "fp14a")); });
    tally.run("realization roundtrip on every lattice member",
              [&] { return c_roundtrip(fixtures); });
    tally.run("frobenius closure trivial on F-pure fixtures",
              [&] { return c_frobenius_trivial(fixtures); });
    tally.run("lattice structure and p-independence", [&] { return c_structure(fixtures); });
    tally.run("closure membership matches skew delta",
              [&] { return c_cross_module(get(fixtures, "fp17_1")); });
    tally.run("root-power adjunction and x-map semilinearity",
              [&] { return c_adjunction_semilinearity(); });
    return tally.failures();
}

} // namespace charp
