#include "charp/groebner.hpp"

#include "charp/errors.hpp"
#include "charp/fp.hpp"

#include <algorithm>
#include <atomic>
#include <set>

namespace charp {

namespace {

std::atomic<std::int64_t> g_pair_budget{100000};

// (lcm(f,g)/lt(f)) * f - (lcm(f,g)/lt(g)) * g for monic f, g
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Monomial l = Monomial::lcm(f.leading_term().mono, g.leading_term().mono);
    Term tf{Monomial::quotient(l, f.leading_term().mono), 1};
    Term tg{Monomial::quotient(l, g.leading_term().mono), 1};
    return f.times_term(tf) - g.times_term(tg);
}

bool all_monomial(const std::vector<Polynomial>& gens) {
    return std::all_of(gens.begin(), gens.end(),
                       [](const Polynomial& f) { return f.is_monomial(); });
}

// minimal monomial generators, monic, sorted: this is the reduced basis
std::vector<Polynomial> monomial_basis(const Ring& ring, const std::vector<Polynomial>& gens) {
    std::vector<Monomial> monos;
    monos.reserve(gens.size());
    for (const auto& f : gens) monos.push_back(f.leading_term().mono);
    std::sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) {
        return compare(a, b, ring->order) == std::strong_ordering::less;
    });
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < monos.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < i && !redundant; ++j) {
            // earlier entries are order-smaller; only they can divide monos[i]
            redundant = monos[j].divides(monos[i]);
        }
        if (!redundant) out.push_back(Polynomial::term(ring, monos[i], 1));
    }
    return out;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::int64_t degree;
};

} // namespace

std::int64_t default_pair_budget() { return g_pair_budget.load(); }

void set_default_pair_budget(std::int64_t budget) {
    if (budget <= 0) throw DomainError("pair budget must be positive");
    g_pair_budget.store(budget);
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors) {
    if (divisors.empty()) return f;
    const Ring& ring = f.ring();
    const std::int64_t p = ring->p.value();
    Polynomial rest = f;
    Polynomial remainder(ring);
    while (!rest.is_zero()) {
        const Term& lt = rest.leading_term();
        const Polynomial* hit = nullptr;
        for (const Polynomial& d : divisors) {
            if (!d.is_zero() && d.leading_term().mono.divides(lt.mono)) {
                hit = &d;
                break;
            }
        }
        if (hit) {
            const Term& dl = hit->leading_term();
            Term q{Monomial::quotient(lt.mono, dl.mono),
                   fp_mul(lt.coeff, fp_inv(dl.coeff, p), p)};
            rest = rest - hit->times_term(q);
        } else {
            remainder = remainder + Polynomial::term(ring, lt.mono, lt.coeff);
            rest = rest - Polynomial::term(ring, lt.mono, lt.coeff);
        }
    }
    return remainder;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
    if (!same_ring(f.ring(), basis.ring)) throw DomainError("normal form: ring mismatch");
    return normal_form(f, basis.gens);
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& basis) {
    return normal_form(f, basis).is_zero();
}

GroebnerBasis groebner_basis(const Ring& ring, const std::vector<Polynomial>& input,
                             std::int64_t pair_budget) {
    if (pair_budget < 0) pair_budget = default_pair_budget();

    std::vector<Polynomial> gens;
    for (const auto& f : input) {
        if (!same_ring(f.ring(), ring)) throw DomainError("groebner basis: ring mismatch");
        if (!f.is_zero()) gens.push_back(f.monic());
    }
    std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
        return compare(a, b) == std::strong_ordering::less;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    if (gens.empty()) return GroebnerBasis{ring, {}};
    if (all_monomial(gens)) return GroebnerBasis{ring, monomial_basis(ring, gens)};

    const MonomialOrder ord = ring->order;
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        auto cmp = compare(a.lcm, b.lcm, ord);
        if (cmp != std::strong_ordering::equal) return cmp == std::strong_ordering::less;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Polynomial> G = gens;
    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> done;
    auto push_pair = [&](std::size_t i, std::size_t j) {
        Monomial l = Monomial::lcm(G[i].leading_term().mono, G[j].leading_term().mono);
        pending.push_back(Pair{i, j, l, l.degree()});
    };
    for (std::size_t j = 1; j < G.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) push_pair(i, j);
    }

    std::int64_t processed = 0;
    while (!pending.empty()) {
        auto best = std::min_element(pending.begin(), pending.end(), pair_less);
        Pair pr = *best;
        pending.erase(best);
        done.insert({pr.i, pr.j});

        if (++processed > pair_budget) {
            throw ResourceLimitError("groebner basis: pair budget exhausted ("
                                     + std::to_string(pair_budget) + ")");
        }

        const Monomial& li = G[pr.i].leading_term().mono;
        const Monomial& lj = G[pr.j].leading_term().mono;
        // product criterion: coprime leading monomials reduce to zero
        if (Monomial::gcd(li, lj).is_one()) continue;
        // chain criterion: lt(g_k) divides the lcm and both side pairs are done
        bool chained = false;
        for (std::size_t k = 0; k < G.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!G[k].leading_term().mono.divides(pr.lcm)) continue;
            auto key_ik = std::minmax(pr.i, k);
            auto key_jk = std::minmax(pr.j, k);
            if (done.count({key_ik.first, key_ik.second}) &&
                done.count({key_jk.first, key_jk.second})) {
                chained = true;
            }
        }
        if (chained) continue;

        Polynomial r = normal_form(s_polynomial(G[pr.i], G[pr.j]), G);
        if (r.is_zero()) continue;
        G.push_back(r.monic());
        const std::size_t added = G.size() - 1;
        for (std::size_t k = 0; k < added; ++k) push_pair(k, added);
    }

    // minimalize: drop elements whose leading monomial another one divides
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        const Monomial& li = G[i].leading_term().mono;
        bool redundant = false;
        for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& lj = G[j].leading_term().mono;
            if (lj == li) {
                redundant = j < i;
            } else if (lj.divides(li)) {
                redundant = true;
            }
        }
        if (!redundant) minimal.push_back(G[i]);
    }

    // interreduce tails until stable
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j) {
                if (j != i) others.push_back(minimal[j]);
            }
            Polynomial reduced = normal_form(minimal[i], others).monic();
            if (!(reduced == minimal[i])) {
                minimal[i] = reduced;
                changed = true;
            }
        }
    }

    std::sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
        return compare(a, b) == std::strong_ordering::less;
    });
    return GroebnerBasis{ring, std::move(minimal)};
}

} // namespace charp
