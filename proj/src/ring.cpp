#include "charp/ring.hpp"

#include "charp/errors.hpp"

#include <set>

namespace charp {

int PolyRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == name) return static_cast<int>(i);
    }
    return -1;
}

bool PolyRing::operator==(const PolyRing& other) const {
    return p == other.p && vars == other.vars && order == other.order;
}

Ring make_ring(std::int64_t p, std::vector<std::string> vars, MonomialOrder order) {
    if (vars.empty()) throw DomainError("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw DomainError("ring: empty variable name");
        if (!seen.insert(v).second) throw DomainError("ring: duplicate variable name " + v);
    }
    return std::make_shared<const PolyRing>(PolyRing{Characteristic(p), std::move(vars), order});
}

bool same_ring(const Ring& a, const Ring& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    return *a == *b;
}

} // namespace charp
