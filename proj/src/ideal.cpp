#include "charp/ideal.hpp"

#include "charp/errors.hpp"
#include "charp/fp.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace charp {

struct Ideal::Cache {
    std::once_flag once;
    std::optional<GroebnerBasis> gb;
};

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& f : gens) {
        if (!same_ring(f.ring(), ring_)) throw DomainError("ideal: generator ring mismatch");
        if (!f.is_zero()) gens_.push_back(std::move(f));
    }
    std::sort(gens_.begin(), gens_.end(), [](const Polynomial& a, const Polynomial& b) {
        return compare(a, b) == std::strong_ordering::greater;
    });
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    monomial_ = std::all_of(gens_.begin(), gens_.end(),
                            [](const Polynomial& f) { return f.is_monomial(); });
    homogeneous_ = std::all_of(gens_.begin(), gens_.end(),
                               [](const Polynomial& f) { return f.is_homogeneous(); });
}

Ideal Ideal::zero(Ring ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::unit(Ring ring) {
    Polynomial one = Polynomial::constant(ring, 1);
    return Ideal(std::move(ring), {one});
}

Ideal Ideal::of_variables(Ring ring, const std::vector<std::size_t>& idxs) {
    std::vector<Polynomial> gens;
    gens.reserve(idxs.size());
    for (std::size_t i : idxs) gens.push_back(Polynomial::variable(ring, i));
    Ideal out(std::move(ring), std::move(gens));
    out.known_prime_ = true; // generated by variables, quotient is a polynomial ring
    out.declared_radical_ = TriState::yes;
    return out;
}

const GroebnerBasis& Ideal::basis() const {
    std::call_once(cache_->once, [this] { cache_->gb = groebner_basis(ring_, gens_); });
    return *cache_->gb;
}

TriState Ideal::radical_flag() const {
    if (declared_radical_ != TriState::unknown) return declared_radical_;
    if (monomial_) {
        const auto& gb = basis().gens;
        bool squarefree = std::all_of(gb.begin(), gb.end(), [](const Polynomial& f) {
            return f.leading_term().mono.is_squarefree();
        });
        return squarefree ? TriState::yes : TriState::no;
    }
    return TriState::unknown;
}

bool Ideal::is_unit() const {
    const auto& g = basis().gens;
    return g.size() == 1 && g[0].is_constant() && !g[0].is_zero();
}

bool Ideal::contains(const Polynomial& f) const {
    if (!same_ring(f.ring(), ring_)) throw DomainError("ideal contains: ring mismatch");
    return normal_form(f, basis()).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [this](const Polynomial& f) { return contains(f); });
}

bool Ideal::equals(const Ideal& other) const {
    if (!same_ring(ring_, other.ring_)) return false;
    return basis().gens == other.basis().gens;
}

Ideal Ideal::canonical() const {
    Ideal out(ring_, basis().gens);
    out.known_prime_ = known_prime_;
    out.declared_radical_ = declared_radical_;
    return out;
}

std::vector<std::string> Ideal::serialize() const {
    const auto& gb = basis().gens;
    std::vector<std::string> out;
    out.reserve(gb.size());
    // descending leading monomials read naturally: (X, Y, Z)
    for (auto it = gb.rbegin(); it != gb.rend(); ++it) out.push_back(it->to_string());
    return out;
}

std::string Ideal::label() const {
    auto parts = serialize();
    if (parts.empty()) return "(0)";
    return "(" + join(parts, ", ") + ")";
}

Ideal Ideal::with_prime_flag(bool known_prime) const {
    Ideal out = *this;
    out.known_prime_ = known_prime;
    if (known_prime) out.declared_radical_ = TriState::yes;
    return out;
}

Ideal Ideal::with_radical_flag(TriState r) const {
    Ideal out = *this;
    out.declared_radical_ = r;
    return out;
}

std::strong_ordering compare(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring())) throw DomainError("ideal compare: ring mismatch");
    const auto& ga = a.basis().gens;
    const auto& gb = b.basis().gens;
    const std::size_t n = std::min(ga.size(), gb.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = compare(ga[i], gb[i]);
        if (c != std::strong_ordering::equal) return c;
    }
    return ga.size() <=> gb.size();
}

Ideal operator+(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring())) throw DomainError("ideal sum: ring mismatch");
    std::vector<Polynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal operator*(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring())) throw DomainError("ideal product: ring mismatch");
    std::vector<Polynomial> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const auto& f : a.gens()) {
        for (const auto& g : b.gens()) gens.push_back(f * g);
    }
    return Ideal(a.ring(), std::move(gens));
}

Ideal multiply(const Polynomial& f, const Ideal& a) {
    std::vector<Polynomial> gens;
    gens.reserve(a.gens().size());
    for (const auto& g : a.gens()) gens.push_back(f * g);
    return Ideal(a.ring(), std::move(gens));
}

namespace {

// exact division f / g; precondition: g divides f
Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw DomainError("exact division by zero");
    const std::int64_t p = f.ring()->p.value();
    Polynomial rest = f;
    Polynomial q(f.ring());
    while (!rest.is_zero()) {
        const Term& lt = rest.leading_term();
        const Term& gl = g.leading_term();
        if (!gl.mono.divides(lt.mono)) {
            throw DomainError("exact division: not a multiple");
        }
        Term t{Monomial::quotient(lt.mono, gl.mono), fp_mul(lt.coeff, fp_inv(gl.coeff, p), p)};
        q = q + Polynomial::term(f.ring(), t.mono, t.coeff);
        rest = rest - g.times_term(t);
    }
    return q;
}

Ideal intersect_monomial(const Ideal& a, const Ideal& b) {
    std::vector<Polynomial> gens;
    for (const auto& f : a.basis().gens) {
        for (const auto& g : b.basis().gens) {
            gens.push_back(Polynomial::term(a.ring(),
                                            Monomial::lcm(f.leading_term().mono,
                                                          g.leading_term().mono),
                                            1));
        }
    }
    return Ideal(a.ring(), std::move(gens));
}

// shift exponents into the extended ring [t, vars...]
Polynomial lift_to_elim(const Polynomial& f, const Ring& ext) {
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        std::vector<std::int64_t> e(ext->nvars(), 0);
        for (std::size_t i = 0; i < t.mono.nvars(); ++i) e[i + 1] = t.mono.exponent(i);
        terms.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(ext, std::move(terms));
}

Polynomial drop_from_elim(const Polynomial& f, const Ring& base) {
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        if (t.mono.exponent(0) != 0) throw DomainError("elimination: term still involves t");
        std::vector<std::int64_t> e(base->nvars(), 0);
        for (std::size_t i = 0; i < base->nvars(); ++i) e[i] = t.mono.exponent(i + 1);
        terms.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return Polynomial::from_terms(base, std::move(terms));
}

std::string fresh_var_name(const Ring& ring) {
    std::string name = "t";
    while (ring->var_index(name) >= 0) name += "_";
    return name;
}

} // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring())) throw DomainError("ideal intersection: ring mismatch");
    if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
    if (a.is_unit()) return b.canonical();
    if (b.is_unit()) return a.canonical();
    if (a.is_monomial() && b.is_monomial()) return intersect_monomial(a, b);

    const Ring& base = a.ring();
    std::vector<std::string> ext_vars;
    ext_vars.push_back(fresh_var_name(base));
    ext_vars.insert(ext_vars.end(), base->vars.begin(), base->vars.end());
    Ring ext = make_ring(base->p.value(), std::move(ext_vars), MonomialOrder::elim_first);

    const Polynomial t = Polynomial::variable(ext, 0);
    const Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : a.gens()) gens.push_back(t * lift_to_elim(f, ext));
    for (const auto& g : b.gens()) gens.push_back(one_minus_t * lift_to_elim(g, ext));

    GroebnerBasis gb = groebner_basis(ext, gens);
    std::vector<Polynomial> out;
    for (const auto& g : gb.gens) {
        // block order: a t-free leading monomial forces a t-free polynomial
        if (g.leading_term().mono.exponent(0) == 0) out.push_back(drop_from_elim(g, base));
    }
    return Ideal(base, std::move(out));
}

Ideal colon(const Ideal& a, const Polynomial& f) {
    if (!same_ring(a.ring(), f.ring())) throw DomainError("colon: ring mismatch");
    if (f.is_zero()) return Ideal::unit(a.ring());
    if (a.is_zero()) return Ideal::zero(a.ring());
    if (a.is_monomial() && f.is_monomial()) {
        const Monomial& m = f.leading_term().mono;
        std::vector<Polynomial> gens;
        for (const auto& g : a.basis().gens) {
            const Monomial& gm = g.leading_term().mono;
            gens.push_back(Polynomial::term(a.ring(),
                                            Monomial::quotient(Monomial::lcm(gm, m), m), 1));
        }
        return Ideal(a.ring(), std::move(gens));
    }
    Ideal principal(a.ring(), {f});
    Ideal meet = intersect(a, principal);
    std::vector<Polynomial> gens;
    gens.reserve(meet.gens().size());
    for (const auto& g : meet.gens()) gens.push_back(exact_divide(g, f));
    return Ideal(a.ring(), std::move(gens));
}

Ideal colon(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring())) throw DomainError("colon: ring mismatch");
    if (b.is_zero()) return Ideal::unit(a.ring());
    std::optional<Ideal> acc;
    for (const auto& f : b.gens()) {
        Ideal c = colon(a, f);
        acc = acc ? intersect(*acc, c) : c;
    }
    return acc->canonical();
}

Ideal frobenius_power(const Ideal& a, std::int64_t e) {
    if (e < 0) throw DomainError("frobenius power: negative iterate");
    if (e == 0) return a.canonical();
    std::vector<Polynomial> gens;
    gens.reserve(a.gens().size());
    for (const auto& f : a.gens()) gens.push_back(frobenius_pow_poly(f, e));
    return Ideal(a.ring(), std::move(gens));
}

Ideal pth_root(const Ideal& j) {
    const Ring& ring = j.ring();
    const std::int64_t p = ring->p.value();
    const std::size_t n = ring->nvars();
    std::vector<Polynomial> gens;
    for (const auto& g : j.gens()) {
        // split g = sum_mu h_mu^p * mu over monomials mu with exponents < p;
        // coefficients carry over since Frobenius fixes F_p
        std::map<std::vector<std::int64_t>, std::vector<Term>> parts;
        for (const Term& t : g.terms()) {
            std::vector<std::int64_t> residue(n), quotient(n);
            for (std::size_t i = 0; i < n; ++i) {
                const std::int64_t e = t.mono.exponent(i);
                residue[i] = e % p;
                quotient[i] = e / p;
            }
            parts[residue].push_back(Term{Monomial(quotient), t.coeff});
        }
        for (auto& [residue, terms] : parts) {
            gens.push_back(Polynomial::from_terms(ring, terms));
        }
    }
    return Ideal(ring, std::move(gens));
}

PrimeList minimal_primes_monomial(const Ideal& a) {
    if (!a.is_monomial()) throw DomainError("minimal primes: input is not a monomial ideal");
    const Ring& ring = a.ring();
    const auto& gb = a.basis().gens;
    if (gb.empty()) {
        return {Ideal::zero(ring).with_prime_flag(true)};
    }
    if (a.is_unit()) return {};

    std::vector<std::vector<std::size_t>> supports;
    for (const auto& g : gb) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < ring->nvars(); ++i) {
            if (g.leading_term().mono.exponent(i) > 0) s.push_back(i);
        }
        supports.push_back(std::move(s));
    }

    const std::size_t n = ring->nvars();
    if (n > 24) throw ResourceLimitError("minimal primes: too many variables for cover search");
    std::vector<std::uint32_t> covers;
    for (std::uint32_t size = 1; size <= n; ++size) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (static_cast<std::uint32_t>(__builtin_popcount(mask)) != size) continue;
            bool hits_all = true;
            for (const auto& s : supports) {
                bool hit = false;
                for (std::size_t v : s) {
                    if (mask & (1u << v)) { hit = true; break; }
                }
                if (!hit) { hits_all = false; break; }
            }
            if (!hits_all) continue;
            bool minimal = true;
            for (std::uint32_t c : covers) {
                if ((c & mask) == c) { minimal = false; break; }
            }
            if (minimal) covers.push_back(mask);
        }
    }
    PrimeList out;
    for (std::uint32_t mask : covers) {
        std::vector<std::size_t> idxs;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) idxs.push_back(i);
        }
        out.push_back(Ideal::of_variables(ring, idxs));
    }
    return out;
}

Polynomial prime_avoidance_element(const Ideal& a, const PrimeList& avoid) {
    const Ring& ring = a.ring();
    const std::int64_t p = ring->p.value();
    for (const auto& q : avoid) {
        if (q.contains(a)) {
            throw DomainError("prime avoidance: the ideal lies inside an avoided prime "
                              + q.label());
        }
    }
    auto outside_all = [&](const Polynomial& f) {
        if (f.is_zero()) return false;
        return std::none_of(avoid.begin(), avoid.end(),
                            [&](const Ideal& q) { return q.contains(f); });
    };

    const std::vector<Polynomial> base = a.gens();
    if (base.empty()) throw DomainError("prime avoidance: zero ideal");

    // little-endian digit vectors over F_p: generators come first, so v = p^i
    // tries g_i itself before any combination
    auto search = [&](const std::vector<Polynomial>& pool,
                      std::int64_t skip_below) -> std::optional<Polynomial> {
        double combos = 1;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            combos *= static_cast<double>(p);
            if (combos > static_cast<double>(1u << 21)) {
                throw ResourceLimitError("prime avoidance: combination space too large");
            }
        }
        const std::int64_t total = static_cast<std::int64_t>(combos);
        for (std::int64_t v = std::max<std::int64_t>(1, skip_below); v < total; ++v) {
            Polynomial cand(ring);
            std::int64_t rest = v;
            for (std::size_t i = 0; i < pool.size() && rest > 0; ++i) {
                const std::int64_t c = rest % p;
                rest /= p;
                if (c != 0) cand = cand + pool[i].scaled(c);
            }
            if (outside_all(cand)) return cand;
        }
        return std::nullopt;
    };

    if (auto hit = search(base, 1)) return *hit;

    std::int64_t tried = 1;
    for (std::size_t i = 0; i < base.size(); ++i) tried *= p;
    std::vector<Polynomial> extended = base;
    for (std::size_t i = 0; i < base.size(); ++i) {
        for (std::size_t j = i; j < base.size(); ++j) extended.push_back(base[i] * base[j]);
    }
    if (auto hit = search(extended, tried)) return *hit;

    throw DomainError("prime avoidance: search exhausted; raise the characteristic "
                      "or extend the generator pool");
}

bool has_positive_height(const Ideal& b, const PrimeList& minimal_primes) {
    if (b.is_unit()) return true;
    return std::none_of(minimal_primes.begin(), minimal_primes.end(),
                        [&](const Ideal& q) { return q.contains(b); });
}

} // namespace charp
