#pragma once

#include <string>
#include <vector>

namespace torlie {

/// One verified identity group: a machine-readable name, the law that was
/// checked (rendered as a formula), how many instances ran, and a witness
/// when something failed.
struct IdentityReport {
    std::string identity;
    std::string anchor;
    std::size_t instances = 0;
    bool ok = true;
    std::string witness;

    static IdentityReport pass(std::string id, std::string law, std::size_t count) {
        return {std::move(id), std::move(law), count, true, {}};
    }
    static IdentityReport fail(std::string id, std::string law, std::size_t count,
                               std::string witness) {
        return {std::move(id), std::move(law), count, false, std::move(witness)};
    }
};

inline bool all_ok(const std::vector<IdentityReport>& reports) {
    for (const auto& r : reports)
        if (!r.ok) return false;
    return true;
}

}  // namespace torlie
