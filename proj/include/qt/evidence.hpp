#ifndef QT_EVIDENCE_HPP
#define QT_EVIDENCE_HPP

#include <map>
#include <string>
#include <vector>

namespace qt {

// One auditable step of a certified computation. `data` holds the
// numbers behind the claim, already rendered as strings.
struct EvidenceEntry {
    std::string stage;
    std::string claim;
    bool certified = false;
    std::map<std::string, std::string> data;

    friend bool operator==(const EvidenceEntry&, const EvidenceEntry&) = default;
};

using Evidence = std::vector<EvidenceEntry>;

} // namespace qt

#endif
