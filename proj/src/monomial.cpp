#include "charp/monomial.hpp"

#include "charp/errors.hpp"

#include <algorithm>

namespace charp {

namespace {

constexpr std::int64_t kExpMax = 2147483647ll; // 2^31-1

std::int64_t checked_exp(std::int64_t v, const char* what) {
    if (v < 0 || v > kExpMax) {
        throw OverflowError(std::string(what) + ": exponent out of range [0, 2^31-1]");
    }
    return v;
}

} // namespace

Monomial::Monomial(std::vector<std::int64_t> exps) : e_(std::move(exps)) {
    for (std::int64_t v : e_) checked_exp(v, "monomial");
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, std::int64_t k) {
    if (i >= nvars) throw DomainError("monomial: variable index out of range");
    Monomial m(nvars);
    m.e_[i] = checked_exp(k, "monomial");
    return m;
}

std::int64_t Monomial::degree() const noexcept {
    std::int64_t d = 0;
    for (std::int64_t v : e_) d += v;
    return d;
}

bool Monomial::is_one() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](std::int64_t v) { return v == 0; });
}

bool Monomial::is_squarefree() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](std::int64_t v) { return v <= 1; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw DomainError("monomial product: variable count mismatch");
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        r.e_[i] = checked_exp(a.e_[i] + b.e_[i], "monomial product");
    }
    return r;
}

bool Monomial::divides(const Monomial& other) const {
    if (nvars() != other.nvars()) throw DomainError("monomial divides: variable count mismatch");
    for (std::size_t i = 0; i < nvars(); ++i) {
        if (e_[i] > other.e_[i]) return false;
    }
    return true;
}

Monomial Monomial::quotient(const Monomial& num, const Monomial& den) {
    if (!den.divides(num)) throw DomainError("monomial quotient: not divisible");
    Monomial r(num.nvars());
    for (std::size_t i = 0; i < num.nvars(); ++i) r.e_[i] = num.e_[i] - den.e_[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw DomainError("monomial lcm: variable count mismatch");
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw DomainError("monomial gcd: variable count mismatch");
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
    return r;
}

Monomial Monomial::pow(std::int64_t k) const {
    if (k < 0) throw DomainError("monomial pow: negative exponent");
    Monomial r(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
        if (e_[i] != 0 && k > kExpMax / e_[i]) {
            throw OverflowError("monomial pow: exponent out of range [0, 2^31-1]");
        }
        r.e_[i] = checked_exp(e_[i] * k, "monomial pow");
    }
    return r;
}

namespace {

// grevlex: higher total degree wins; on ties the rightmost nonzero entry of
// a-b decides, negative meaning a is larger.
std::strong_ordering grevlex_compare(const std::vector<std::int64_t>& a,
                                     const std::vector<std::int64_t>& b,
                                     std::size_t lo, std::size_t hi) {
    std::int64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
    if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
    for (std::size_t i = hi; i > lo; --i) {
        std::int64_t d = a[i - 1] - b[i - 1];
        if (d != 0) return d > 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(const std::vector<std::int64_t>& a,
                                 const std::vector<std::int64_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = a[i] - b[i];
        if (d != 0) return d > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

} // namespace

std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
    if (a.nvars() != b.nvars()) throw DomainError("monomial compare: variable count mismatch");
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    switch (order) {
    case MonomialOrder::grevlex:
        return grevlex_compare(ea, eb, 0, ea.size());
    case MonomialOrder::lex:
        return lex_compare(ea, eb);
    case MonomialOrder::elim_first: {
        if (ea.empty()) return std::strong_ordering::equal;
        if (ea[0] != eb[0]) {
            return ea[0] < eb[0] ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return grevlex_compare(ea, eb, 1, ea.size());
    }
    }
    throw DomainError("monomial compare: unknown order");
}

} // namespace charp
