#pragma once

#include <set>
#include <vector>

#include "ngsmell/config.hpp"
#include "ngsmell/findings.hpp"
#include "ngsmell/model.hpp"

namespace ngsmell {

// Pure per-smell detectors. Each maps immutable model state to findings;
// none mutates its inputs or fails.

std::vector<Finding> detect_overusing_any(const ts::SyntaxTree& tree, const ThresholdConfig& cfg);

std::vector<Finding> detect_large_component(const ComponentInfo& component,
                                            const ThresholdConfig& cfg);

std::vector<Finding> detect_large_file(const FileStats& stats, const ThresholdConfig& cfg);

// Flags component classes extending a class declared inside the scanned
// project; external bases are exempt.
std::vector<Finding> detect_inheritance(const ProjectModel& model, const ThresholdConfig& cfg);

std::vector<Finding> detect_too_many_inputs(const ComponentInfo& component,
                                            const ThresholdConfig& cfg);

std::vector<Finding> detect_inefficient_method_binding(const ComponentInfo& component,
                                                       const ThresholdConfig& cfg);

std::vector<Finding> detect_direct_dom(const ComponentInfo& component, const ThresholdConfig& cfg);

std::vector<Finding> detect_parent_child_communication(const ComponentInfo& component,
                                                       const ThresholdConfig& cfg);

std::vector<Finding> detect_coupled_services(const ServiceInfo& service, const ProjectModel& model,
                                             const ThresholdConfig& cfg);

std::vector<Finding> detect_prop_drilling(const std::vector<InputChain>& chains,
                                          const ProjectModel& model, const ThresholdConfig& cfg);

std::vector<Finding> detect_duplicated_component(const ProjectModel& model,
                                                 const ThresholdConfig& cfg);

// Normalized-token similarity over class body + template with identifiers
// alpha-renamed; symmetric, self-similarity 1.
double component_similarity(const ComponentInfo& a, const ComponentInfo& b,
                            const ProjectModel& model);

// Detectors active for a framework: Angular runs all 11; react-ts and
// unknown run OverusingAnyType + LargeFile.
std::set<SmellId> dispatch_set(FrameworkKind framework);

// Runs `enabled ∩ dispatch_set(model.framework)` and returns findings
// sorted by (file, start line, smell id).
std::vector<Finding> run_detectors(const ProjectModel& model, const ThresholdConfig& cfg,
                                   const std::set<SmellId>& enabled);

std::vector<Finding> run_single_detector(const ProjectModel& model, const ThresholdConfig& cfg,
                                         SmellId smell);

}  // namespace ngsmell
