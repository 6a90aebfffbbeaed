#include "doctest.h"

#include "ngsmell/model.hpp"

#include "test_support.hpp"

using namespace ngsmell;
using test_support::fixture_path;
using test_support::parse_ok;
using test_support::read_file;

namespace {

FileReadFn no_reader() {
    return [](const std::string&) -> std::optional<std::string> { return std::nullopt; };
}

ProjectModel model_from_sources(std::vector<std::pair<std::string, std::string>> files,
                                DiagnosticList& diags) {
    std::vector<ts::SyntaxTree> trees;
    for (auto& [name, source] : files) {
        trees.push_back(parse_ok(name, std::move(source)));
    }
    return build_full_model(std::move(trees), no_reader(), FrameworkKind::Angular, diags);
}

}  // namespace

TEST_CASE("service plus component: injection recorded") {
    DiagnosticList diags;
    auto model = model_from_sources(
        {{"service-injection.ts", read_file(fixture_path("basics/service-injection.ts"))}}, diags);
    REQUIRE(model.services.size() == 1);
    REQUIRE(model.components.size() == 1);
    CHECK(model.services[0].class_name == "UserService");
    CHECK(model.components[0].class_name == "UserComponent");
    REQUIRE(model.components[0].injected.size() == 1);
    CHECK(model.components[0].injected[0] == "UserService");
    CHECK(model.services[0].public_methods == std::vector<std::string>{"getName"});
}

TEST_CASE("zero files yield an empty model") {
    DiagnosticList diags;
    auto model = model_from_sources({}, diags);
    CHECK(model.components.empty());
    CHECK(model.services.empty());
    CHECK(model.files.empty());
    CHECK(model.parent_child.empty());
    CHECK(model.chains.empty());
}

TEST_CASE("multi-declaration file counts decorated classes") {
    DiagnosticList diags;
    auto model = model_from_sources(
        {{"app.ts", read_file(fixture_path("listings/large_file/app.ts"))}}, diags);
    REQUIRE(model.files.size() == 1);
    CHECK(model.files[0].top_level_decorated_class_count == 4);
    CHECK(model.components.size() == 2);
    CHECK(model.services.size() == 2);
}

TEST_CASE("component graph from the drilled-input fixture matches the string-scan oracle") {
    DiagnosticList diags;
    auto model = model_from_sources(
        {{"prop-drilling.ts", read_file(fixture_path("listings/prop_drilling/prop-drilling.ts"))}},
        diags);
    REQUIRE(model.parent_child.size() == 3);
    auto oracle = test_support::edge_oracle(model);
    std::map<std::pair<std::string, std::string>, int> got;
    for (const auto& edge : model.parent_child) {
        ++got[{model.components[edge.parent].class_name,
               model.components[edge.child].class_name}];
    }
    CHECK(got == oracle);
    CHECK(got[{"ParentComponent", "ChildComponentA"}] == 1);
    CHECK(got[{"ChildComponentA", "ChildComponentB"}] == 1);
    CHECK(got[{"ChildComponentB", "ChildComponentC"}] == 1);
}

TEST_CASE("templates without known selectors produce no edges") {
    DiagnosticList diags;
    auto model = model_from_sources({{"solo.ts", R"(
@Component({ selector: 'app-solo', template: '<div><p>{{ x }}</p></div>' })
export class SoloComponent { x = 1; }
)"}},
                                    diags);
    CHECK(model.parent_child.empty());
}

TEST_CASE("two parents using the same child selector give two edges") {
    DiagnosticList diags;
    auto model = model_from_sources({{"multi.ts", R"(
@Component({ selector: 'app-kid', template: '<span>{{ label }}</span>' })
export class KidComponent { label = 'k'; }

@Component({ selector: 'app-first', template: '<app-kid></app-kid>' })
export class FirstComponent {}

@Component({ selector: 'app-second', template: '<app-kid></app-kid>' })
export class SecondComponent {}
)"}},
                                    diags);
    auto oracle = test_support::edge_oracle(model);
    std::map<std::pair<std::string, std::string>, int> got;
    for (const auto& edge : model.parent_child) {
        ++got[{model.components[edge.parent].class_name,
               model.components[edge.child].class_name}];
    }
    CHECK(got == oracle);
    CHECK(got.size() == 2);
    int into_kid = 0;
    for (const auto& edge : model.parent_child) {
        if (model.components[edge.child].class_name == "KidComponent") ++into_kid;
    }
    CHECK(into_kid == 2);
}

TEST_CASE("injection graph for the shared-service fixture") {
    DiagnosticList diags;
    auto model = model_from_sources(
        {{"app-service.ts", read_file(fixture_path("listings/coupled_service/app-service.ts"))}},
        diags);
    REQUIRE(model.services.size() == 1);
    const ServiceInfo& service = model.services[0];
    CHECK(service.class_name == "AppService");
    REQUIRE(service.injected_into.size() == 2);
    std::set<std::string> clients;
    for (int idx : service.injected_into) clients.insert(model.components[idx].class_name);
    CHECK(clients == std::set<std::string>{"HeaderComponent", "ListComponent"});
    REQUIRE(service.method_usage.count("HeaderComponent"));
    REQUIRE(service.method_usage.count("ListComponent"));
    CHECK(service.method_usage.at("HeaderComponent") == std::set<std::string>{"getUser"});
    CHECK(service.method_usage.at("ListComponent") == std::set<std::string>{"getItems"});
}

TEST_CASE("service never injected has an empty client list") {
    DiagnosticList diags;
    auto model = model_from_sources({{"lonely.ts", R"(
@Injectable({ providedIn: 'root' })
export class LonelyService {
  ping() { return 1; }
}
)"}},
                                    diags);
    REQUIRE(model.services.size() == 1);
    CHECK(model.services[0].injected_into.empty());
    CHECK(model.services[0].method_usage.empty());
}

TEST_CASE("component calling two methods of one service records both") {
    DiagnosticList diags;
    auto model = model_from_sources({{"two-methods.ts", R"(
@Injectable({ providedIn: 'root' })
export class DataService {
  load() { return []; }
  save() { return true; }
}

@Component({ selector: 'app-editor', template: '<div></div>' })
export class EditorComponent {
  constructor(private data: DataService) {}

  refresh() {
    this.data.load();
    this.data.save();
  }
}
)"}},
                                    diags);
    REQUIRE(model.services.size() == 1);
    CHECK(model.services[0].method_usage.at("EditorComponent") ==
          std::set<std::string>{"load", "save"});
}

TEST_CASE("input chain from the drilled-input fixture has depth 3") {
    DiagnosticList diags;
    auto model = model_from_sources(
        {{"prop-drilling.ts", read_file(fixture_path("listings/prop_drilling/prop-drilling.ts"))}},
        diags);
    REQUIRE(model.chains.size() == 1);
    const InputChain& chain = model.chains[0];
    CHECK(chain.depth == 3);
    CHECK(chain.input == "data");
    REQUIRE(chain.components.size() == 4);
    CHECK(model.components[chain.components[0]].class_name == "ParentComponent");
    CHECK(model.components[chain.components[1]].class_name == "ChildComponentA");
    CHECK(model.components[chain.components[2]].class_name == "ChildComponentB");
    CHECK(model.components[chain.components[3]].class_name == "ChildComponentC");
}

TEST_CASE("direct parent-to-child binding is a depth-1 chain") {
    DiagnosticList diags;
    auto model = model_from_sources({{"direct.ts", R"(
@Component({ selector: 'app-leaf', template: '<p>{{ data }}</p>' })
export class LeafComponent {
  @Input() data!: string;
}

@Component({ selector: 'app-top', template: '<app-leaf [data]="info"></app-leaf>' })
export class TopComponent {
  info = 'x';
}
)"}},
                                    diags);
    REQUIRE(model.chains.size() == 1);
    CHECK(model.chains[0].depth == 1);
}

TEST_CASE("aliased inputs trace through their template-facing name") {
    DiagnosticList diags;
    auto model = model_from_sources({{"alias.ts", R"(
@Component({ selector: 'app-x1', template: '<app-x2 [outer]="info"></app-x2>' })
export class X1Component { info = 1; }

@Component({ selector: 'app-x2', template: '<app-x3 [data]="inner"></app-x3>' })
export class X2Component { @Input('outer') inner!: number; }

@Component({ selector: 'app-x3', template: '<p>{{ data }}</p>' })
export class X3Component { @Input() data!: number; }
)"}},
                                    diags);
    REQUIRE(model.chains.size() == 1);
    CHECK(model.chains[0].depth == 2);
    CHECK(model.chains[0].input == "inner");
    REQUIRE(model.chains[0].components.size() == 3);
    CHECK(model.components[model.chains[0].components[0]].class_name == "X1Component");
}

TEST_CASE("a middle component that uses the property splits the chain") {
    DiagnosticList diags;
    // four components; the second intermediary also interpolates the input
    auto model = model_from_sources({{"split.ts", R"(
@Component({ selector: 'app-a', template: '<app-b [data]="info"></app-b>' })
export class AComponent { info = 'x'; }

@Component({ selector: 'app-b', template: '<app-c [data]="data"></app-c>' })
export class BComponent { @Input() data!: string; }

@Component({ selector: 'app-c', template: '<p>{{ data }}</p><app-d [data]="data"></app-d>' })
export class CComponent { @Input() data!: string; }

@Component({ selector: 'app-d', template: '<p>{{ data }}</p>' })
export class DComponent { @Input() data!: string; }
)"}},
                                    diags);
    // manual trace: A->B->C stops at C (C interpolates data); C->D restarts
    REQUIRE(model.chains.size() == 2);
    std::set<int> depths{model.chains[0].depth, model.chains[1].depth};
    CHECK(depths == std::set<int>{1, 2});
}

TEST_CASE("chain tracing terminates on a cyclic five-component graph") {
    DiagnosticList diags;
    auto model = model_from_sources({{"cycle.ts", R"(
@Component({ selector: 'app-c1', template: '<app-c2 [data]="data"></app-c2>' })
export class C1Component { @Input() data!: string; }

@Component({ selector: 'app-c2', template: '<app-c3 [data]="data"></app-c3>' })
export class C2Component { @Input() data!: string; }

@Component({ selector: 'app-c3', template: '<app-c4 [data]="data"></app-c4>' })
export class C3Component { @Input() data!: string; }

@Component({ selector: 'app-c4', template: '<app-c5 [data]="data"></app-c5>' })
export class C4Component { @Input() data!: string; }

@Component({ selector: 'app-c5', template: '<app-c1 [data]="data"></app-c1>' })
export class C5Component { @Input() data!: string; }
)"}},
                                    diags);
    // pure cycle: no start hop exists, so no chain is emitted, and tracing
    // finishes with a cycle diagnostic
    CHECK(model.chains.empty());
    bool cycle_diag = false;
    for (const auto& d : diags) {
        if (d.message.find("cycle") != std::string::npos) cycle_diag = true;
    }
    CHECK(cycle_diag);
}

TEST_CASE("resolve_template inline wins over templateUrl with a warning") {
    DiagnosticList diags;
    auto tree = parse_ok("both.ts", R"(
@Component({ selector: 'x', template: '<p>{{ a }}</p>', templateUrl: './x.html' })
export class BothComponent { a = 1; }
)");
    const auto* cls = std::get_if<ts::ClassDecl>(&tree.roots[0]);
    REQUIRE(cls != nullptr);
    auto resolved = resolve_template(*cls, tree.file, no_reader(), diags);
    CHECK(resolved.origin == TemplateOrigin::Kind::Inline);
    CHECK(resolved.source == "<p>{{ a }}</p>");
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].message.find("inline template wins") != std::string::npos);
}

TEST_CASE("resolve_template reads external files relative to the component") {
    DiagnosticList diags;
    auto tree = parse_ok("src/app/dash.ts", R"(
@Component({ selector: 'x', templateUrl: './dash.html' })
export class DashComponent {}
)");
    FileEntry entry{"src/app/dash.ts", FileKind::TypeScriptSource, 0};
    FileReadFn reader = [](const std::string& path) -> std::optional<std::string> {
        if (path == "src/app/dash.html") return std::string("<p>dash</p>");
        return std::nullopt;
    };
    const auto* cls = std::get_if<ts::ClassDecl>(&tree.roots[0]);
    auto resolved = resolve_template(*cls, entry, reader, diags);
    CHECK(resolved.origin == TemplateOrigin::Kind::ExternalFile);
    CHECK(resolved.file == "src/app/dash.html");
    CHECK(resolved.source == "<p>dash</p>");
    CHECK(diags.empty());
}

TEST_CASE("missing templateUrl target warns and yields an empty template") {
    DiagnosticList diags;
    auto tree = parse_ok("gone.ts", R"(
@Component({ selector: 'x', templateUrl: './gone.html' })
export class GoneComponent {}
)");
    const auto* cls = std::get_if<ts::ClassDecl>(&tree.roots[0]);
    auto resolved = resolve_template(*cls, tree.file, no_reader(), diags);
    CHECK(resolved.origin == TemplateOrigin::Kind::Missing);
    CHECK(resolved.source.empty());
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].message.find("not found") != std::string::npos);
}

TEST_CASE("neither template key present warns and yields an empty template") {
    DiagnosticList diags;
    auto tree = parse_ok("none.ts", R"(
@Component({ selector: 'x' })
export class NoneComponent {}
)");
    const auto* cls = std::get_if<ts::ClassDecl>(&tree.roots[0]);
    auto resolved = resolve_template(*cls, tree.file, no_reader(), diags);
    CHECK(resolved.origin == TemplateOrigin::Kind::Missing);
    REQUIRE(diags.size() == 1);
}

TEST_CASE("class with both Component and Injectable is a component with a warning") {
    DiagnosticList diags;
    auto model = model_from_sources({{"bothdeco.ts", R"(
@Component({ selector: 'app-x', template: '<p></p>' })
@Injectable()
export class HybridComponent {}
)"}},
                                    diags);
    CHECK(model.components.size() == 1);
    CHECK(model.services.empty());
    bool warned = false;
    for (const auto& d : diags) {
        if (d.message.find("both Component and Injectable") != std::string::npos) warned = true;
    }
    CHECK(warned);
}

TEST_CASE("duplicate selectors are recorded with a diagnostic") {
    DiagnosticList diags;
    auto model = model_from_sources({{"dups.ts", R"(
@Component({ selector: 'app-same', template: '<p>1</p>' })
export class OneComponent {}

@Component({ selector: 'app-same', template: '<p>2</p>' })
export class TwoComponent {}
)"}},
                                    diags);
    CHECK(model.components.size() == 2);
    bool warned = false;
    for (const auto& d : diags) {
        if (d.message.find("app-same") != std::string::npos) warned = true;
    }
    CHECK(warned);
}

TEST_CASE("physical line counting includes blanks and comments") {
    DiagnosticList diags;
    auto model = model_from_sources({{"loc.ts", "// one\n\nexport class A {}\n"}}, diags);
    REQUIRE(model.files.size() == 1);
    CHECK(model.files[0].file_loc == 3);
}

TEST_CASE("every edge selector occurs verbatim in the parent template") {
    DiagnosticList diags;
    auto model = model_from_sources(
        {{"prop-drilling.ts", read_file(fixture_path("listings/prop_drilling/prop-drilling.ts"))}},
        diags);
    for (const auto& edge : model.parent_child) {
        const auto& parent = model.components[edge.parent];
        CHECK(parent.template_ast.source.find(edge.via_selector) != std::string::npos);
    }
}
