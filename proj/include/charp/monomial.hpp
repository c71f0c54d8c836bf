#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace charp {

// Term orders. grevlex and lex are the public surface; elim_first is the block
// order (exponent of variable 0 first, grevlex on the rest) used internally to
// eliminate a single auxiliary variable.
enum class MonomialOrder { grevlex, lex, elim_first };

// Exponent vector with checked arithmetic. Exponents stay below 2^31 so all
// intermediate products fit in int64.
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::int64_t> exps);

    static Monomial variable(std::size_t nvars, std::size_t i, std::int64_t k = 1);

    std::size_t nvars() const noexcept { return e_.size(); }
    std::int64_t exponent(std::size_t i) const { return e_[i]; }
    const std::vector<std::int64_t>& exponents() const noexcept { return e_; }
    std::int64_t degree() const noexcept;
    bool is_one() const noexcept;
    bool is_squarefree() const noexcept;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    bool divides(const Monomial& other) const;
    // exact quotient; precondition: divides(other) viewed as other / *this
    static Monomial quotient(const Monomial& num, const Monomial& den);
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial gcd(const Monomial& a, const Monomial& b);
    Monomial pow(std::int64_t k) const;

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.e_ == b.e_; }

private:
    std::vector<std::int64_t> e_;
};

std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order);

} // namespace charp
