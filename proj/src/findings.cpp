#include "ngsmell/findings.hpp"

#include <algorithm>
#include <tuple>

namespace ngsmell {

const std::array<SmellDescriptor, kSmellCount>& smell_catalog() {
    static const std::array<SmellDescriptor, kSmellCount> kCatalog = {{
        {SmellId::LargeComponent, "LargeComponent", Maturity::Evaluated,
         "component class exceeds the line threshold"},
        {SmellId::InefficientMethodBinding, "InefficientMethodBinding", Maturity::Experimental,
         "template interpolation or property binding invokes a component method"},
        {SmellId::OverusingAnyType, "OverusingAnyType", Maturity::Evaluated,
         "explicit any annotations or casts erase type safety"},
        {SmellId::ExcessiveParentChildCommunication, "ExcessiveParentChildCommunication",
         Maturity::Experimental, "parent drives a child component through @ViewChild calls"},
        {SmellId::DirectDomManipulation, "DirectDomManipulation", Maturity::Experimental,
         "nativeElement dereference bypasses the template layer"},
        {SmellId::CoupledServices, "CoupledServices", Maturity::Experimental,
         "one service serves components with disjoint method usage"},
        {SmellId::InheritanceInsteadOfComposition, "InheritanceInsteadOfComposition",
         Maturity::Evaluated, "component class extends a user-defined base class"},
        {SmellId::TooManyInputs, "TooManyInputs", Maturity::Evaluated,
         "component declares too many @Input properties"},
        {SmellId::PropDrilling, "PropDrilling", Maturity::Experimental,
         "input forwarded through intermediary components that do not use it"},
        {SmellId::LargeFile, "LargeFile", Maturity::Evaluated,
         "file exceeds the line threshold or aggregates several decorated classes"},
        {SmellId::DuplicatedComponent, "DuplicatedComponent", Maturity::Experimental,
         "two components share a highly similar structure"},
    }};
    return kCatalog;
}

std::string_view to_string(SmellId id) {
    return smell_catalog()[static_cast<size_t>(id)].name;
}

std::optional<SmellId> smell_from_string(std::string_view name) {
    for (const auto& desc : smell_catalog()) {
        if (desc.name == name) return desc.id;
    }
    return std::nullopt;
}

Maturity maturity_of(SmellId id) {
    return smell_catalog()[static_cast<size_t>(id)].maturity;
}

std::string_view to_string(Maturity m) {
    return m == Maturity::Evaluated ? "evaluated" : "experimental";
}

bool finding_less(const Finding& a, const Finding& b) {
    return std::tie(a.file, a.start_line, a.smell, a.end_line, a.subject) <
           std::tie(b.file, b.start_line, b.smell, b.end_line, b.subject);
}

void sort_findings(std::vector<Finding>& findings) {
    std::stable_sort(findings.begin(), findings.end(), finding_less);
}

}  // namespace ngsmell
