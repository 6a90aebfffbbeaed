#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ngsmell {

// The fixed 11-smell catalog, in catalog order.
enum class SmellId {
    LargeComponent,
    InefficientMethodBinding,
    OverusingAnyType,
    ExcessiveParentChildCommunication,
    DirectDomManipulation,
    CoupledServices,
    InheritanceInsteadOfComposition,
    TooManyInputs,
    PropDrilling,
    LargeFile,
    DuplicatedComponent,
};

inline constexpr int kSmellCount = 11;

enum class Maturity { Evaluated, Experimental };

struct SmellDescriptor {
    SmellId id;
    std::string_view name;
    Maturity maturity;
    std::string_view description;
};

const std::array<SmellDescriptor, kSmellCount>& smell_catalog();

std::string_view to_string(SmellId id);
std::optional<SmellId> smell_from_string(std::string_view name);
Maturity maturity_of(SmellId id);
std::string_view to_string(Maturity m);

using MetaValue = std::variant<int64_t, double, std::string>;

struct Finding {
    SmellId smell = SmellId::LargeComponent;
    std::string file;
    int start_line = 1;
    int end_line = 1;
    std::string subject;
    std::string message;
    std::vector<std::pair<std::string, MetaValue>> metadata;
    Maturity maturity = Maturity::Evaluated;
};

// Total order: (file, start line, smell id), then end line and subject as
// tie-breakers so reports are byte-stable.
bool finding_less(const Finding& a, const Finding& b);

void sort_findings(std::vector<Finding>& findings);

}  // namespace ngsmell
