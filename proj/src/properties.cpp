#include "anonlevel/properties.hpp"

#include <algorithm>

namespace anonlevel {

bool Recognisability::has(RecognitionSource s) const {
    return std::find(sources.begin(), sources.end(), s) != sources.end();
}

std::vector<Diagnostic> apply_implications(const DerivedProperties& derived) {
    std::vector<Diagnostic> out;
    const auto& rec = derived.recognisability;
    if (rec.conditionality == Conditionality::unconditional &&
        derived.linkability.conditionality == Conditionality::void_) {
        out.push_back(make_error("IMP-001", "unconditional recognisability implies linkability, found void"));
    }
    if (rec.conditionality != Conditionality::void_ && derived.accountability.kind == AccountabilityKind::void_) {
        out.push_back(make_error("IMP-002", "recognisable individuals must be accountable, found void"));
    }
    if (rec.has(RecognitionSource::identifiability) && !derived.ioi_traceable) {
        out.push_back(make_error("IMP-003", "identifiability requires traceable items of interest"));
    }
    if (rec.conditionality == Conditionality::void_ && !rec.sources.empty()) {
        out.push_back(make_error("IMP-004", "void recognisability cannot have a source"));
    }
    return out;
}

}  // namespace anonlevel
