#pragma once

#include <cstdint>

namespace charp {

// A validated prime characteristic p with 2 <= p < 2^31.
class Characteristic {
public:
    explicit Characteristic(std::int64_t p);
    std::int64_t value() const noexcept { return p_; }
    friend bool operator==(const Characteristic& a, const Characteristic& b) noexcept {
        return a.p_ == b.p_;
    }

private:
    std::int64_t p_;
};

bool is_prime_int(std::int64_t n) noexcept;

// Arithmetic in F_p on least non-negative residues.
std::int64_t fp_normalize(std::int64_t c, std::int64_t p) noexcept;
std::int64_t fp_add(std::int64_t a, std::int64_t b, std::int64_t p) noexcept;
std::int64_t fp_sub(std::int64_t a, std::int64_t b, std::int64_t p) noexcept;
std::int64_t fp_mul(std::int64_t a, std::int64_t b, std::int64_t p) noexcept;
std::int64_t fp_neg(std::int64_t a, std::int64_t p) noexcept;
std::int64_t fp_pow(std::int64_t a, std::int64_t e, std::int64_t p);
std::int64_t fp_inv(std::int64_t a, std::int64_t p);

} // namespace charp
