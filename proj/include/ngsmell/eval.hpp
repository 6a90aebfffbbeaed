#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ngsmell/config.hpp"
#include "ngsmell/diagnostics.hpp"
#include "ngsmell/findings.hpp"

namespace ngsmell {

enum class Variant { Smelly, Refactored };

struct DatasetInstance {
    std::string id;
    SmellId smell = SmellId::OverusingAnyType;
    Variant variant = Variant::Smelly;
    std::string path;  // relative to the dataset root
};

struct ConfusionMatrix {
    int tp = 0;
    int fp = 0;
    int tn = 0;
    int fn = 0;

    int total() const { return tp + fp + tn + fn; }
};

struct Metrics {
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

class ManifestError : public std::runtime_error {
public:
    explicit ManifestError(const std::string& what) : std::runtime_error(what) {}
};

// JSON manifest `[{id, smell, variant, path}, ...]`; every id must appear
// exactly twice, once per variant, with a consistent smell, and every path
// must exist under the dataset root.
std::vector<DatasetInstance> load_manifest(const std::filesystem::path& manifest_file,
                                           const std::filesystem::path& dataset_root);

// Runs the instance's single detector over its directory; positive iff at
// least one finding of that smell. Parse failures classify negative with a
// diagnostic.
bool classify_instance(const DatasetInstance& instance,
                       const std::filesystem::path& dataset_root, const ThresholdConfig& cfg,
                       DiagnosticList& diags);

// Smelly positive -> tp, smelly negative -> fn, refactored positive -> fp,
// refactored negative -> tn. Experimental smells are skipped unless enabled.
std::map<SmellId, ConfusionMatrix> evaluate(const std::vector<DatasetInstance>& instances,
                                            const std::filesystem::path& dataset_root,
                                            const ThresholdConfig& cfg,
                                            bool include_experimental, DiagnosticList& diags);

// accuracy=(tp+tn)/total; precision=tp/(tp+fp); recall=tp/(tp+fn);
// f1=2pr/(p+r); zero denominators yield 0.
Metrics compute_metrics(const ConfusionMatrix& cm);

std::string render_eval_json(const std::map<SmellId, ConfusionMatrix>& results,
                             const DiagnosticList& diags);
std::string render_eval_text(const std::map<SmellId, ConfusionMatrix>& results,
                             const DiagnosticList& diags);

}  // namespace ngsmell
