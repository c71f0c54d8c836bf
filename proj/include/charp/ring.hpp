#pragma once

#include "charp/fp.hpp"
#include "charp/monomial.hpp"

#include <memory>
#include <string>
#include <vector>

namespace charp {

// Ambient polynomial ring F_p[vars] with a fixed term order. Immutable and
// shared; polynomials hold a handle and refuse mixed-ring arithmetic.
struct PolyRing {
    Characteristic p;
    std::vector<std::string> vars;
    MonomialOrder order;

    std::size_t nvars() const noexcept { return vars.size(); }
    // -1 when the name is not declared
    int var_index(const std::string& name) const;
    bool operator==(const PolyRing& other) const;
};

using Ring = std::shared_ptr<const PolyRing>;

Ring make_ring(std::int64_t p, std::vector<std::string> vars,
               MonomialOrder order = MonomialOrder::grevlex);

bool same_ring(const Ring& a, const Ring& b);

} // namespace charp
