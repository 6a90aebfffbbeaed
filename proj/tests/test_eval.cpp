#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "ngsmell/eval.hpp"

#include "test_support.hpp"

using namespace ngsmell;
using test_support::fixture_path;
namespace fs = std::filesystem;

namespace {

struct TempManifest {
    fs::path path;

    explicit TempManifest(const std::string& body) {
        path = fs::temp_directory_path() /
               ("ngsmell_manifest_" + std::to_string(reinterpret_cast<uintptr_t>(this)) + ".json");
        std::ofstream(path) << body;
    }
    ~TempManifest() { fs::remove(path); }
};

double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

}  // namespace

TEST_CASE("manifest: a two-record pair loads") {
    TempManifest manifest(R"([
  {"id": "any-1", "smell": "OverusingAnyType", "variant": "smelly", "path": "listings/any_overuse"},
  {"id": "any-1", "smell": "OverusingAnyType", "variant": "refactored", "path": "eval_pairs/any_refactored"}
])");
    auto instances = load_manifest(manifest.path, fixture_path(""));
    REQUIRE(instances.size() == 2);
    CHECK(instances[0].smell == SmellId::OverusingAnyType);
    CHECK(instances[0].variant == Variant::Smelly);
    CHECK(instances[1].variant == Variant::Refactored);
}

TEST_CASE("manifest: a full-scale manifest of 30 pairs per smell loads") {
    // 5 smells x 30 smelly instances plus their refactors = 300 records
    const char* smells[] = {"OverusingAnyType", "LargeComponent", "LargeFile",
                            "InheritanceInsteadOfComposition", "TooManyInputs"};
    std::string body = "[\n";
    for (const char* smell : smells) {
        for (int i = 0; i < 30; ++i) {
            std::string id = std::string(smell) + "-" + std::to_string(i);
            body += "  {\"id\": \"" + id + "\", \"smell\": \"" + smell +
                    "\", \"variant\": \"smelly\", \"path\": \"listings/any_overuse\"},\n";
            body += "  {\"id\": \"" + id + "\", \"smell\": \"" + smell +
                    "\", \"variant\": \"refactored\", \"path\": \"eval_pairs/any_refactored\"},\n";
        }
    }
    body.erase(body.size() - 2, 1);  // drop the trailing comma
    body += "]\n";
    TempManifest manifest(body);
    auto instances = load_manifest(manifest.path, fixture_path(""));
    CHECK(instances.size() == 300);
    int smelly = 0;
    for (const auto& instance : instances) {
        if (instance.variant == Variant::Smelly) ++smelly;
    }
    CHECK(smelly == 150);
}

TEST_CASE("manifest: an unpaired id is rejected") {
    TempManifest manifest(R"([
  {"id": "solo", "smell": "OverusingAnyType", "variant": "smelly", "path": "listings/any_overuse"}
])");
    CHECK_THROWS_AS(load_manifest(manifest.path, fixture_path("")), ManifestError);
}

TEST_CASE("manifest: two smelly variants under one id are rejected") {
    TempManifest manifest(R"([
  {"id": "dup", "smell": "OverusingAnyType", "variant": "smelly", "path": "listings/any_overuse"},
  {"id": "dup", "smell": "OverusingAnyType", "variant": "smelly", "path": "listings/any_overuse"}
])");
    CHECK_THROWS_AS(load_manifest(manifest.path, fixture_path("")), ManifestError);
}

TEST_CASE("manifest: a missing path is rejected by name") {
    TempManifest manifest(R"([
  {"id": "gone", "smell": "OverusingAnyType", "variant": "smelly", "path": "no/such/dir"},
  {"id": "gone", "smell": "OverusingAnyType", "variant": "refactored", "path": "listings/any_overuse"}
])");
    try {
        load_manifest(manifest.path, fixture_path(""));
        FAIL("expected ManifestError");
    } catch (const ManifestError& e) {
        CHECK(std::string(e.what()).find("gone") != std::string::npos);
    }
}

TEST_CASE("classify: smelly instance positive, refactored negative") {
    ThresholdConfig cfg;
    DiagnosticList diags;
    DatasetInstance smelly{"any-1", SmellId::OverusingAnyType, Variant::Smelly,
                           "listings/any_overuse"};
    DatasetInstance refactored{"any-1", SmellId::OverusingAnyType, Variant::Refactored,
                               "eval_pairs/any_refactored"};
    CHECK(classify_instance(smelly, fixture_path(""), cfg, diags));
    CHECK_FALSE(classify_instance(refactored, fixture_path(""), cfg, diags));
}

TEST_CASE("classify: an instance whose files all fail to parse is negative with a diagnostic") {
    ThresholdConfig cfg;
    DiagnosticList diags;
    DatasetInstance broken{"bad-1", SmellId::OverusingAnyType, Variant::Smelly,
                           "eval_error/broken"};
    CHECK_FALSE(classify_instance(broken, fixture_path(""), cfg, diags));
    REQUIRE_FALSE(diags.empty());
    CHECK(diags[0].message.find("bad-1") != std::string::npos);
}

TEST_CASE("evaluate maps variants onto the confusion matrix") {
    TempManifest manifest(R"([
  {"id": "any-1", "smell": "OverusingAnyType", "variant": "smelly", "path": "listings/any_overuse"},
  {"id": "any-1", "smell": "OverusingAnyType", "variant": "refactored", "path": "eval_pairs/any_refactored"}
])");
    auto instances = load_manifest(manifest.path, fixture_path(""));
    ThresholdConfig cfg;
    DiagnosticList diags;
    auto results = evaluate(instances, fixture_path(""), cfg, false, diags);
    REQUIRE(results.count(SmellId::OverusingAnyType));
    const ConfusionMatrix& cm = results.at(SmellId::OverusingAnyType);
    CHECK(cm.tp == 1);
    CHECK(cm.tn == 1);
    CHECK(cm.fp == 0);
    CHECK(cm.fn == 0);
    CHECK(cm.total() == 2);
}

TEST_CASE("evaluation is deterministic given dataset and config") {
    TempManifest manifest(R"([
  {"id": "any-1", "smell": "OverusingAnyType", "variant": "smelly", "path": "listings/any_overuse"},
  {"id": "any-1", "smell": "OverusingAnyType", "variant": "refactored", "path": "eval_pairs/any_refactored"}
])");
    auto instances = load_manifest(manifest.path, fixture_path(""));
    ThresholdConfig cfg;
    DiagnosticList diags_a, diags_b;
    auto a = evaluate(instances, fixture_path(""), cfg, false, diags_a);
    auto b = evaluate(instances, fixture_path(""), cfg, false, diags_b);
    std::string ra = render_eval_json(a, diags_a);
    std::string rb = render_eval_json(b, diags_b);
    CHECK(ra == rb);
}

TEST_CASE("evaluate on an empty instance list is empty") {
    ThresholdConfig cfg;
    DiagnosticList diags;
    auto results = evaluate({}, fixture_path(""), cfg, false, diags);
    CHECK(results.empty());
}

TEST_CASE("experimental smells are skipped unless enabled") {
    TempManifest manifest(R"([
  {"id": "pd-1", "smell": "PropDrilling", "variant": "smelly", "path": "listings/prop_drilling"},
  {"id": "pd-1", "smell": "PropDrilling", "variant": "refactored", "path": "eval_pairs/drilling_refactored"}
])");
    auto instances = load_manifest(manifest.path, fixture_path(""));
    ThresholdConfig cfg;
    DiagnosticList diags;
    auto headline = evaluate(instances, fixture_path(""), cfg, false, diags);
    CHECK(headline.empty());
    bool skipped_note = false;
    for (const auto& d : diags) {
        if (d.message.find("experimental") != std::string::npos) skipped_note = true;
    }
    CHECK(skipped_note);

    DiagnosticList diags2;
    auto full = evaluate(instances, fixture_path(""), cfg, true, diags2);
    REQUIRE(full.count(SmellId::PropDrilling));
    CHECK(full.at(SmellId::PropDrilling).tp == 1);
    CHECK(full.at(SmellId::PropDrilling).tn == 1);
}

TEST_CASE("metrics: perfect matrix") {
    Metrics m = compute_metrics(ConfusionMatrix{30, 0, 30, 0});
    CHECK(m.accuracy == doctest::Approx(1.0));
    CHECK(m.precision == doctest::Approx(1.0));
    CHECK(m.recall == doctest::Approx(1.0));
    CHECK(m.f1 == doctest::Approx(1.0));
}

TEST_CASE("metrics: the seven-false-positive matrix") {
    Metrics m = compute_metrics(ConfusionMatrix{30, 7, 23, 0});
    CHECK(round3(m.accuracy) == doctest::Approx(0.883));
    CHECK(round3(m.precision) == doctest::Approx(0.811));
    CHECK(round3(m.recall) == doctest::Approx(1.000));
    CHECK(round3(m.f1) == doctest::Approx(0.896));
}

TEST_CASE("metrics: the three-false-positive matrix") {
    Metrics m = compute_metrics(ConfusionMatrix{30, 3, 27, 0});
    CHECK(round3(m.accuracy) == doctest::Approx(0.950));
    CHECK(round3(m.precision) == doctest::Approx(0.909));
    CHECK(round3(m.recall) == doctest::Approx(1.000));
    CHECK(round3(m.f1) == doctest::Approx(0.952));
}

TEST_CASE("metrics: zero-denominator conventions") {
    Metrics m = compute_metrics(ConfusionMatrix{0, 0, 30, 0});
    CHECK(m.accuracy == doctest::Approx(1.0));
    CHECK(m.precision == doctest::Approx(0.0));
    CHECK(m.recall == doctest::Approx(0.0));
    CHECK(m.f1 == doctest::Approx(0.0));
}

TEST_CASE("metric invariants over a sweep of matrices") {
    for (int tp = 0; tp <= 5; ++tp) {
        for (int fp = 0; fp <= 5; ++fp) {
            for (int tn = 0; tn <= 5; ++tn) {
                for (int fn = 0; fn <= 5; ++fn) {
                    if (tp + fp + tn + fn == 0) continue;
                    Metrics m = compute_metrics(ConfusionMatrix{tp, fp, tn, fn});
                    CHECK(m.accuracy >= 0.0);
                    CHECK(m.accuracy <= 1.0);
                    CHECK(m.precision >= 0.0);
                    CHECK(m.precision <= 1.0);
                    CHECK(m.recall >= 0.0);
                    CHECK(m.recall <= 1.0);
                    CHECK(m.f1 <= std::max(m.precision, m.recall) + 1e-12);
                    if (tp + fn > 0) {
                        CHECK((m.recall == 1.0) == (fn == 0));
                    }
                }
            }
        }
    }
}

TEST_CASE("eval json rendering reports per-smell matrices and metrics") {
    std::map<SmellId, ConfusionMatrix> results;
    results[SmellId::LargeComponent] = ConfusionMatrix{30, 7, 23, 0};
    DiagnosticList diags;
    std::string text = render_eval_json(results, diags);
    CHECK(text.find("\"LargeComponent\"") != std::string::npos);
    CHECK(text.find("\"precision\": 0.811") != std::string::npos);
    CHECK(text.find("\"f1\": 0.896") != std::string::npos);
}
