#include "charp/fp.hpp"

#include "charp/errors.hpp"

namespace charp {

bool is_prime_int(std::int64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Characteristic::Characteristic(std::int64_t p) : p_(p) {
    if (p < 2 || p > 2147483647ll) {
        throw DomainError("characteristic out of range [2, 2^31-1]: " + std::to_string(p));
    }
    if (!is_prime_int(p)) {
        throw DomainError("characteristic is not prime: " + std::to_string(p));
    }
}

std::int64_t fp_normalize(std::int64_t c, std::int64_t p) noexcept {
    c %= p;
    if (c < 0) c += p;
    return c;
}

std::int64_t fp_add(std::int64_t a, std::int64_t b, std::int64_t p) noexcept {
    return (a + b) % p;
}

std::int64_t fp_sub(std::int64_t a, std::int64_t b, std::int64_t p) noexcept {
    return fp_normalize(a - b, p);
}

std::int64_t fp_mul(std::int64_t a, std::int64_t b, std::int64_t p) noexcept {
    // operands < 2^31, so the product fits in int64
    return (a * b) % p;
}

std::int64_t fp_neg(std::int64_t a, std::int64_t p) noexcept {
    return fp_normalize(-a, p);
}

std::int64_t fp_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
    if (e < 0) throw DomainError("fp_pow: negative exponent");
    std::int64_t base = fp_normalize(a, p);
    std::int64_t acc = 1 % p;
    while (e > 0) {
        if (e & 1) acc = fp_mul(acc, base, p);
        base = fp_mul(base, base, p);
        e >>= 1;
    }
    return acc;
}

std::int64_t fp_inv(std::int64_t a, std::int64_t p) {
    a = fp_normalize(a, p);
    if (a == 0) throw DomainError("fp_inv: zero has no inverse");
    // extended Euclid
    std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    return fp_normalize(s0, p);
}

} // namespace charp
