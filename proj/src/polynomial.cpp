#include "charp/polynomial.hpp"

#include "charp/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace charp {

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b, const char* what) {
    if (!same_ring(a.ring(), b.ring())) {
        throw DomainError(std::string(what) + ": operands live in different rings");
    }
}

} // namespace

Polynomial Polynomial::constant(Ring ring, std::int64_t c) {
    Monomial one(ring->nvars());
    return term(std::move(ring), std::move(one), c);
}

Polynomial Polynomial::variable(Ring ring, std::size_t i) {
    Monomial m = Monomial::variable(ring->nvars(), i);
    return term(std::move(ring), std::move(m), 1);
}

Polynomial Polynomial::term(Ring ring, Monomial m, std::int64_t c) {
    Polynomial f(ring);
    const std::int64_t p = ring->p.value();
    if (m.nvars() != ring->nvars()) {
        throw DomainError("polynomial term: monomial has wrong variable count");
    }
    c = fp_normalize(c, p);
    if (c != 0) f.terms_.push_back(Term{std::move(m), c});
    return f;
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
    const std::int64_t p = ring->p.value();
    const MonomialOrder ord = ring->order;
    std::map<Monomial, std::int64_t, std::function<bool(const Monomial&, const Monomial&)>> acc(
        [ord](const Monomial& a, const Monomial& b) { return compare(a, b, ord) == std::strong_ordering::greater; });
    for (auto& t : terms) {
        if (t.mono.nvars() != ring->nvars()) {
            throw DomainError("polynomial: monomial has wrong variable count");
        }
        auto it = acc.try_emplace(t.mono, 0).first;
        it->second = fp_normalize(it->second + fp_normalize(t.coeff, p), p);
    }
    Polynomial f(ring);
    for (auto& [m, c] : acc) {
        if (c != 0) f.terms_.push_back(Term{m, c});
    }
    return f;
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

bool Polynomial::is_homogeneous() const noexcept {
    if (terms_.empty()) return true;
    const std::int64_t d = terms_[0].mono.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Term& t) { return t.mono.degree() == d; });
}

std::int64_t Polynomial::total_degree() const noexcept {
    std::int64_t d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
    return terms_[0];
}

Polynomial Polynomial::operator-() const {
    const std::int64_t p = ring_->p.value();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back(Term{t.mono, fp_neg(t.coeff, p)});
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a, b, "polynomial sum");
    const std::int64_t p = a.ring_->p.value();
    const MonomialOrder ord = a.ring_->order;
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        auto cmp = compare(a.terms_[i].mono, b.terms_[j].mono, ord);
        if (cmp == std::strong_ordering::greater) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (cmp == std::strong_ordering::less) {
            r.terms_.push_back(b.terms_[j++]);
        } else {
            std::int64_t c = fp_add(a.terms_[i].coeff, b.terms_[j].coeff, p);
            if (c != 0) r.terms_.push_back(Term{a.terms_[i].mono, c});
            ++i; ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a, b, "polynomial product");
    const std::int64_t p = a.ring_->p.value();
    std::vector<Term> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const Term& ta : a.terms_) {
        for (const Term& tb : b.terms_) {
            acc.push_back(Term{ta.mono * tb.mono, fp_mul(ta.coeff, tb.coeff, p)});
        }
    }
    return Polynomial::from_terms(a.ring_, std::move(acc));
}

Polynomial Polynomial::scaled(std::int64_t c) const {
    const std::int64_t p = ring_->p.value();
    c = fp_normalize(c, p);
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back(Term{t.mono, fp_mul(t.coeff, c, p)});
    return r;
}

Polynomial Polynomial::times_term(const Term& t) const {
    const std::int64_t p = ring_->p.value();
    const std::int64_t c = fp_normalize(t.coeff, p);
    Polynomial r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& s : terms_) r.terms_.push_back(Term{s.mono * t.mono, fp_mul(s.coeff, c, p)});
    return r;
}

Polynomial Polynomial::pow(std::int64_t k) const {
    if (k < 0) throw DomainError("polynomial pow: negative exponent");
    Polynomial acc = Polynomial::constant(ring_, 1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        if (k > 1) base = base * base;
        k >>= 1;
    }
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(fp_inv(terms_[0].coeff, ring_->p.value()));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].coeff != b.terms_[i].coeff || !(a.terms_[i].mono == b.terms_[i].mono)) {
            return false;
        }
    }
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (k) out += " + ";
        const Term& t = terms_[k];
        std::string mono;
        for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
            const std::int64_t e = t.mono.exponent(i);
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->vars[i];
            if (e != 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) {
            out += std::to_string(t.coeff);
        } else if (t.coeff == 1) {
            out += mono;
        } else {
            out += std::to_string(t.coeff) + "*" + mono;
        }
    }
    return out;
}

std::int64_t pow_p(std::int64_t p, std::int64_t e) {
    if (e < 0) throw DomainError("pow_p: negative exponent");
    std::int64_t acc = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        if (acc > 2147483647ll / p) throw OverflowError("p^e exceeds 2^31-1");
        acc *= p;
    }
    return acc;
}

Polynomial frobenius_pow_poly(const Polynomial& f, std::int64_t e) {
    if (e < 0) throw DomainError("frobenius power: negative iterate");
    if (e == 0) return f;
    const std::int64_t q = pow_p(f.ring()->p.value(), e);
    std::vector<Term> terms;
    terms.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        // c^q = c for c in F_p, so only exponents scale
        terms.push_back(Term{t.mono.pow(q), t.coeff});
    }
    return Polynomial::from_terms(f.ring(), std::move(terms));
}

std::strong_ordering compare(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring(), b.ring())) throw DomainError("polynomial compare: ring mismatch");
    const MonomialOrder ord = a.ring()->order;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    const std::size_t n = std::min(ta.size(), tb.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto cmp = compare(ta[i].mono, tb[i].mono, ord);
        if (cmp != std::strong_ordering::equal) return cmp;
        if (ta[i].coeff != tb[i].coeff) {
            return ta[i].coeff < tb[i].coeff ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
        }
    }
    if (ta.size() != tb.size()) {
        return ta.size() < tb.size() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

} // namespace charp
