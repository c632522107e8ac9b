#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "genusgauge/errors.hpp"

namespace gg {

// Finitely generated abelian group in invariant-factor form:
// Z^rank + Z/d1 + ... + Z/dn with 2 <= d1 | d2 | ... | dn.
struct AbGroup {
    std::int64_t rank = 0;
    std::vector<std::int64_t> torsion;

    AbGroup() = default;
    AbGroup(std::int64_t r, std::vector<std::int64_t> t) : rank(r), torsion(std::move(t)) {
        if (rank < 0) throw ParamError("AbGroup: negative rank");
        for (std::size_t i = 0; i < torsion.size(); ++i) {
            if (torsion[i] < 2) throw ParamError("AbGroup: invariant factor < 2");
            if (i > 0 && torsion[i] % torsion[i - 1] != 0)
                throw ParamError("AbGroup: invariant factors must form a divisibility chain");
        }
    }

    friend bool operator==(const AbGroup& a, const AbGroup& b) {
        return a.rank == b.rank && a.torsion == b.torsion;
    }
    friend bool operator!=(const AbGroup& a, const AbGroup& b) { return !(a == b); }

    // "0", "Z", "Z^2 x Z/2 x Z/2", ...
    std::string str() const {
        std::string s;
        if (rank == 1) {
            s = "Z";
        } else if (rank > 1) {
            s = "Z^" + std::to_string(rank);
        }
        for (std::int64_t d : torsion) {
            if (!s.empty()) s += " x ";
            s += "Z/" + std::to_string(d);
        }
        if (s.empty()) s = "0";
        return s;
    }
};

} // namespace gg
