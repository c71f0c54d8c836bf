#pragma once

#include "charp/ring.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace charp {

struct Term {
    Monomial mono;
    std::int64_t coeff; // least non-negative residue, nonzero in stored terms
};

// Element of F_p[vars]; terms are kept strictly descending in the ring order,
// so the representation is canonical and terms_[0] is the leading term.
class Polynomial {
public:
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial constant(Ring ring, std::int64_t c);
    static Polynomial variable(Ring ring, std::size_t i);
    static Polynomial term(Ring ring, Monomial m, std::int64_t c);
    static Polynomial from_terms(Ring ring, std::vector<Term> terms);

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    bool is_constant() const noexcept;
    bool is_homogeneous() const noexcept;
    // degree of the zero polynomial is -1
    std::int64_t total_degree() const noexcept;
    const Term& leading_term() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(std::int64_t c) const;
    Polynomial times_term(const Term& t) const;
    Polynomial pow(std::int64_t k) const;
    Polynomial monic() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    std::string to_string() const;

private:
    Ring ring_;
    std::vector<Term> terms_;
};

// p^e as int64 with overflow check
std::int64_t pow_p(std::int64_t p, std::int64_t e);

// f^(p^e): exponents scale by p^e, coefficients are fixed by Frobenius on F_p.
Polynomial frobenius_pow_poly(const Polynomial& f, std::int64_t e);

// total order on polynomials of one ring, used for canonical sorting:
// term-by-term on (monomial, coefficient), prefix-shorter first.
std::strong_ordering compare(const Polynomial& a, const Polynomial& b);

} // namespace charp
