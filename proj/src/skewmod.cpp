#include "charp/skewmod.hpp"

#include "charp/errors.hpp"
#include "charp/groebner.hpp"

#include <algorithm>

namespace charp {

namespace {

constexpr std::size_t kBasisBudget = 4096;

using Row = std::vector<std::int64_t>;

void enumerate_monomials(std::size_t var, std::vector<std::int64_t>& exps, std::int64_t left,
                         std::vector<Monomial>& out) {
    if (var == exps.size()) {
        out.emplace_back(exps);
        return;
    }
    for (std::int64_t e = 0; e <= left; ++e) {
        exps[var] = e;
        enumerate_monomials(var + 1, exps, left - e, out);
    }
    exps[var] = 0;
}

// Monomials of degree <= cap outside the leading term ideal, ascending.
std::vector<Monomial> standard_monomials(const Ideal& level, int cap) {
    const Ring ring = level.ring();
    std::vector<Monomial> all;
    std::vector<std::int64_t> exps(ring->nvars(), 0);
    enumerate_monomials(0, exps, cap, all);
    const GroebnerBasis& gb = level.basis();
    std::vector<Monomial> kept;
    for (const auto& m : all) {
        bool standard = true;
        for (const auto& g : gb.gens)
            if (g.leading_term().mono.divides(m)) { standard = false; break; }
        if (standard) kept.push_back(m);
    }
    if (kept.size() > kBasisBudget)
        throw ResourceLimitError("truncation level basis exceeds the size budget");
    std::sort(kept.begin(), kept.end(), [&](const Monomial& a, const Monomial& b) {
        return compare(a, b, ring->order) == std::strong_ordering::less;
    });
    return kept;
}

// Reduced row echelon form in place; returns the pivot column of each row.
std::vector<std::size_t> rref(std::vector<Row>& m, std::int64_t p) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t sel = r;
        while (sel < m.size() && m[sel][c] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        const std::int64_t inv = fp_inv(m[r][c], p);
        for (auto& v : m[r]) v = fp_mul(v, inv, p);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const std::int64_t f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = fp_sub(m[i][j], fp_mul(f, m[r][j], p), p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Canonical null space basis: one vector per free column of the RREF.
std::vector<Row> null_space(std::vector<Row> m, std::size_t cols, std::int64_t p) {
    const std::vector<std::size_t> pivots = rref(m, p);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Row> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Row v(cols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = fp_neg(m[r][f], p);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Coordinate rows of the images against the monomials they jointly use.
std::vector<Row> map_rows(const std::vector<Polynomial>& images, MonomialOrder ord) {
    auto less = [ord](const Monomial& a, const Monomial& b) {
        return compare(a, b, ord) == std::strong_ordering::less;
    };
    std::vector<Monomial> keys;
    for (const auto& f : images)
        for (const auto& t : f.terms()) keys.push_back(t.mono);
    std::sort(keys.begin(), keys.end(), less);
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<Row> rows(keys.size(), Row(images.size(), 0));
    for (std::size_t j = 0; j < images.size(); ++j)
        for (const auto& t : images[j].terms()) {
            const std::size_t i = static_cast<std::size_t>(
                std::lower_bound(keys.begin(), keys.end(), t.mono, less) - keys.begin());
            rows[i][j] = t.coeff;
        }
    return rows;
}

Polynomial rep_of(const Ring& ring, const std::vector<Monomial>& basis, const Row& v) {
    std::vector<Term> ts;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (v[i] != 0) ts.push_back(Term{basis[i], v[i]});
    return Polynomial::from_terms(ring, std::move(ts));
}

} // namespace

SkewTruncation::SkewTruncation(RingPresentation pres, Ideal a_test, int levels, int degree_cap)
    : pres_(std::move(pres)), a_test_(Ideal::zero(pres_.ambient())), levels_(levels),
      degree_cap_(degree_cap) {
    if (!same_ring(pres_.ambient(), a_test.ring()))
        throw DomainError("truncation: ring mismatch");
    if (levels_ < 0) throw DomainError("truncation: negative level count");
    if (degree_cap_ < 0) throw DomainError("truncation: negative degree cap");
    a_test_ = (a_test + pres_.defining_ideal()).canonical();
    for (int n = 0; n <= levels_; ++n) {
        level_ideals_.push_back(pres_.level_ideal(a_test_, n).canonical());
        bases_.push_back(standard_monomials(level_ideals_.back(), degree_cap_));
    }
}

const Ideal& SkewTruncation::level_ideal(int n) const {
    if (n < 0 || n > levels_) throw DomainError("truncation: level out of range");
    return level_ideals_[static_cast<std::size_t>(n)];
}

const std::vector<Monomial>& SkewTruncation::level_basis(int n) const {
    if (n < 0 || n > levels_) throw DomainError("truncation: level out of range");
    return bases_[static_cast<std::size_t>(n)];
}

Polynomial SkewTruncation::reduce(const Polynomial& h, int n) const {
    if (!same_ring(h.ring(), pres_.ambient())) throw DomainError("truncation: ring mismatch");
    return normal_form(h, level_ideal(n).basis());
}

Polynomial SkewTruncation::x_map(const Polynomial& h, int n) const {
    if (n < 0 || n >= levels_) throw DomainError("x-map leaves the truncation");
    return reduce(frobenius_pow_poly(reduce(h, n), 1), n + 1);
}

Polynomial SkewTruncation::x_power(const Polynomial& h, int n, int k) const {
    if (k < 0 || n < 0 || n + k > levels_) throw DomainError("x-map leaves the truncation");
    Polynomial out = reduce(h, n);
    for (int i = 0; i < k; ++i) out = x_map(out, n + i);
    return out;
}

std::vector<SubspaceBasis> gamma_x(const SkewTruncation& t) {
    const Ring ring = t.presentation().ambient();
    const int N = t.levels();
    std::vector<SubspaceBasis> out;
    for (int l = 0; l <= N; ++l) {
        const auto& basis = t.level_basis(l);
        SubspaceBasis sb;
        if (!basis.empty()) {
            std::vector<Polynomial> images;
            for (const auto& b : basis)
                images.push_back(
                    t.reduce(frobenius_pow_poly(Polynomial::term(ring, b, 1), N - l), N));
            auto rows = map_rows(images, ring->order);
            for (const auto& v : null_space(std::move(rows), basis.size(), t.p()))
                sb.reps.push_back(rep_of(ring, basis, v));
        }
        out.push_back(std::move(sb));
    }
    return out;
}

DeltaResult delta_s_truncated(const SkewTruncation& t, const Polynomial& candidate) {
    const Ring ring = t.presentation().ambient();
    if (!same_ring(ring, candidate.ring())) throw DomainError("delta: ring mismatch");
    if (candidate.is_zero()) throw DomainError("delta: zero candidate");
    DeltaResult out{candidate, {}};
    const auto& basis = t.level_basis(0);
    if (basis.empty()) return out;
    std::vector<Row> rows;
    for (int n = 0; n <= t.levels(); ++n) {
        std::vector<Polynomial> images;
        for (const auto& b : basis)
            images.push_back(
                t.reduce(candidate * frobenius_pow_poly(Polynomial::term(ring, b, 1), n), n));
        auto block = map_rows(images, ring->order);
        rows.insert(rows.end(), std::make_move_iterator(block.begin()),
                    std::make_move_iterator(block.end()));
    }
    for (const auto& v : null_space(std::move(rows), basis.size(), t.p()))
        out.space.reps.push_back(rep_of(ring, basis, v));
    return out;
}

DeltaResult delta_s_truncated(const SkewTruncation& t, const SpecialIdealLattice& lat,
                              const MultSet& s) {
    return delta_s_truncated(t, closure_multiplier(t.presentation(), lat, s));
}

bool contains(const SkewTruncation& t, int level, const SubspaceBasis& space,
              const Polynomial& h) {
    const Ring ring = t.presentation().ambient();
    const Polynomial nf = t.reduce(h, level);
    if (nf.is_zero()) return true;
    const auto& basis = t.level_basis(level);
    auto less = [&](const Monomial& a, const Monomial& b) {
        return compare(a, b, ring->order) == std::strong_ordering::less;
    };
    auto index_of = [&](const Monomial& m) -> std::ptrdiff_t {
        auto it = std::lower_bound(basis.begin(), basis.end(), m, less);
        if (it == basis.end() || !(*it == m)) return -1;
        return it - basis.begin();
    };
    std::vector<Row> rows(basis.size(), Row(space.reps.size() + 1, 0));
    for (std::size_t j = 0; j < space.reps.size(); ++j)
        for (const auto& term : space.reps[j].terms()) {
            const std::ptrdiff_t i = index_of(term.mono);
            if (i < 0) throw DomainError("subspace rep escapes the level basis");
            rows[static_cast<std::size_t>(i)][j] = term.coeff;
        }
    for (const auto& term : nf.terms()) {
        const std::ptrdiff_t i = index_of(term.mono);
        if (i < 0) return false;
        rows[static_cast<std::size_t>(i)].back() = term.coeff;
    }
    const std::vector<std::size_t> pivots = rref(rows, t.p());
    for (auto c : pivots)
        if (c == space.reps.size()) return false;
    return true;
}

GradedAnnihilatorDatum graded_annihilator(const SkewTruncation& t,
                                          const std::vector<SkewElement>& elements) {
    const Ring ring = t.presentation().ambient();
    const int N = t.levels();
    std::vector<std::vector<Polynomial>> closed(static_cast<std::size_t>(N) + 1);
    std::vector<std::pair<int, Polynomial>> work;
    auto push = [&](int l, const Polynomial& rep) {
        if (rep.is_zero()) return;
        for (const auto& f : closed[static_cast<std::size_t>(l)])
            if (compare(f, rep) == std::strong_ordering::equal) return;
        closed[static_cast<std::size_t>(l)].push_back(rep);
        work.emplace_back(l, rep);
    };
    for (const auto& e : elements) {
        if (e.level < 0 || e.level > N)
            throw DomainError("graded annihilator: level out of range");
        push(e.level, t.reduce(e.rep, e.level));
    }
    while (!work.empty()) {
        const auto [l, rep] = work.back();
        work.pop_back();
        if (l < N) push(l + 1, t.x_map(rep, l));
    }
    GradedAnnihilatorDatum out;
    for (int n = 0; n <= N; ++n) {
        Ideal bn = Ideal::unit(ring);
        for (int l = 0; l + n <= N; ++l)
            for (const auto& h : closed[static_cast<std::size_t>(l)]) {
                const Polynomial img = t.reduce(frobenius_pow_poly(h, n), l + n);
                if (img.is_zero()) continue;
                bn = intersect(bn, colon(t.level_ideal(l + n), img));
            }
        out.levels.push_back(bn.canonical());
    }
    return out;
}

} // namespace charp
