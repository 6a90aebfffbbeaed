#include "doctest.h"

#include "ngsmell/ts_ast.hpp"

#include "test_support.hpp"

using namespace ngsmell;
using test_support::fixture_path;
using test_support::parse_ok;
using test_support::read_file;

namespace {

const ts::ClassDecl* first_class(const ts::SyntaxTree& tree) {
    for (const auto& decl : tree.roots) {
        if (const auto* cls = std::get_if<ts::ClassDecl>(&decl)) return cls;
    }
    return nullptr;
}

std::vector<const ts::ClassDecl*> all_classes(const ts::SyntaxTree& tree) {
    std::vector<const ts::ClassDecl*> out;
    for (const auto& decl : tree.roots) {
        if (const auto* cls = std::get_if<ts::ClassDecl>(&decl)) out.push_back(cls);
    }
    return out;
}

}  // namespace

TEST_CASE("component class with decorator and selector argument") {
    auto tree = parse_ok("user.component.ts",
                         read_file(fixture_path("basics/user.component.ts")));
    auto classes = all_classes(tree);
    REQUIRE(classes.size() == 1);
    const ts::ClassDecl& cls = *classes[0];
    CHECK(cls.name == "UserComponent");
    REQUIRE(cls.decorators.size() == 1);
    CHECK(cls.decorators[0].name == "Component");
    bool found_selector = false;
    for (const auto& arg : cls.decorators[0].arguments) {
        if (arg.key == "selector") {
            found_selector = true;
            CHECK(arg.kind == ts::DecoratorArgument::Kind::StringLit);
            CHECK(arg.value == "app-user");
        }
    }
    CHECK(found_selector);
    REQUIRE(cls.properties.size() == 1);
    CHECK(cls.properties[0].name == "name");
    REQUIRE(cls.properties[0].type.has_value());
    CHECK(cls.properties[0].type->text == "string");
}

TEST_CASE("empty source yields zero roots") {
    auto tree = parse_ok("empty.ts", "");
    CHECK(tree.roots.empty());
    CHECK(tree.any_sites.empty());
    CHECK(tree.lines.line_count() == 0);
}

TEST_CASE("any annotations in the overusing-any listing") {
    auto tree = parse_ok("user-profile.component.ts",
                         read_file(fixture_path("listings/any_overuse/user-profile.component.ts")));
    const ts::ClassDecl* cls = first_class(tree);
    REQUIRE(cls != nullptr);
    REQUIRE(cls->properties.size() >= 2);
    const ts::PropertyMember* user = nullptr;
    const ts::PropertyMember* users = nullptr;
    for (const auto& prop : cls->properties) {
        if (prop.name == "user") user = &prop;
        if (prop.name == "users") users = &prop;
    }
    REQUIRE(user != nullptr);
    REQUIRE(users != nullptr);
    REQUIRE(user->type.has_value());
    CHECK(user->type->is_any);
    CHECK_FALSE(user->type->is_any_array);
    REQUIRE(users->type.has_value());
    CHECK(users->type->is_any_array);
    CHECK_FALSE(users->type->is_any);
    CHECK(tree.any_sites.size() == 5);
}

TEST_CASE("type annotation normalization and flags") {
    auto tree = parse_ok("types.ts", R"(export class T {
  a: any;
  b: any[];
  c: Array<any>;
  d: Array < any >;
  e: Promise<any>;
  f: string;
})");
    const ts::ClassDecl* cls = first_class(tree);
    REQUIRE(cls != nullptr);
    REQUIRE(cls->properties.size() == 6);
    CHECK(cls->properties[0].type->is_any);
    CHECK(cls->properties[1].type->is_any_array);
    CHECK(cls->properties[2].type->is_any_array);
    CHECK(cls->properties[2].type->text == "Array<any>");
    CHECK(cls->properties[3].type->is_any_array);
    CHECK(cls->properties[3].type->text == "Array<any>");
    CHECK_FALSE(cls->properties[4].type->is_any);
    CHECK_FALSE(cls->properties[4].type->is_any_array);
    CHECK(cls->properties[5].type->text == "string");
    // a, b, c, d count; Promise<any> and string do not
    CHECK(tree.any_sites.size() == 4);
}

TEST_CASE("any in comments, strings, and identifier substrings does not count") {
    auto tree = parse_ok("noise.ts", R"(// any here
/* as any there */
export class Noise {
  anyValue = 1;
  label = 'any';
  tpl = `as any`;
  manyAny = "x: any";
})");
    CHECK(tree.any_sites.empty());
}

TEST_CASE("as-any casts count, including array forms") {
    auto tree = parse_ok("casts.ts", R"(export class C {
  go(v: unknown) {
    const a = v as any;
    const b = v as any[];
    const c = v as Array<any>;
    return [a, b, c];
  }
})");
    REQUIRE(tree.any_sites.size() == 3);
    CHECK(tree.any_sites[0].kind == ts::AnySiteKind::Cast);
    CHECK_FALSE(tree.any_sites[0].is_array);
    CHECK(tree.any_sites[1].kind == ts::AnySiteKind::Cast);
    CHECK(tree.any_sites[1].is_array);
    CHECK(tree.any_sites[2].is_array);
}

TEST_CASE("heritage, abstraction, and members are captured") {
    auto tree = parse_ok("home.component.ts",
                         read_file(fixture_path("listings/inheritance/home.component.ts")));
    auto classes = all_classes(tree);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0]->name == "BasePageComponent");
    CHECK(classes[0]->is_abstract);
    CHECK_FALSE(classes[0]->extends_target.has_value());
    CHECK(classes[1]->name == "HomeComponent");
    REQUIRE(classes[1]->extends_target.has_value());
    CHECK(*classes[1]->extends_target == "BasePageComponent");
    // class_span excludes the decorator: lines 12-14 of the fixture
    CHECK(tree.lines.locate(classes[1]->class_span.begin).line == 12);
    CHECK(tree.lines.locate(classes[1]->class_span.end - 1).line == 14);
    CHECK(tree.lines.locate(classes[1]->span.begin).line == 11);
}

TEST_CASE("constructor parameters keep modifiers and types") {
    auto tree = parse_ok("service-injection.ts",
                         read_file(fixture_path("basics/service-injection.ts")));
    auto classes = all_classes(tree);
    REQUIRE(classes.size() == 2);
    const ts::ClassDecl* component = classes[1];
    const ts::MethodMember* ctor = nullptr;
    for (const auto& method : component->methods) {
        if (method.kind == ts::MethodKind::Constructor) ctor = &method;
    }
    REQUIRE(ctor != nullptr);
    REQUIRE(ctor->params.size() == 1);
    CHECK(ctor->params[0].name == "userService");
    CHECK(ctor->params[0].is_ctor_property);
    REQUIRE(ctor->params[0].type.has_value());
    CHECK(ctor->params[0].type->text == "UserService");
    // body records the textual chain this.userService.getName as a call
    bool found_chain = false;
    for (const auto& chain : ctor->body.chains) {
        if (chain.from_this && chain.is_call && chain.segments.size() == 2 &&
            chain.segments[0] == "userService" && chain.segments[1] == "getName") {
            found_chain = true;
        }
    }
    CHECK(found_chain);
}

TEST_CASE("member access chains resolve to textual chains") {
    auto tree = parse_ok("alert.component.ts",
                         read_file(fixture_path("listings/direct_dom/alert.component.ts")));
    const ts::ClassDecl* cls = first_class(tree);
    REQUIRE(cls != nullptr);
    const ts::MethodMember* hook = nullptr;
    for (const auto& method : cls->methods) {
        if (method.name == "ngAfterViewInit") hook = &method;
    }
    REQUIRE(hook != nullptr);
    bool found = false;
    for (const auto& chain : hook->body.chains) {
        if (chain.from_this && chain.segments.size() == 4 && chain.segments[0] == "alertBox" &&
            chain.segments[1] == "nativeElement" && chain.segments[2] == "style" &&
            chain.segments[3] == "backgroundColor") {
            found = true;
            CHECK_FALSE(chain.is_call);
        }
    }
    CHECK(found);
}

TEST_CASE("imports and interfaces are represented") {
    auto tree = parse_ok("imports.ts", R"(import { Component, Input as In } from '@angular/core';
import Default from './default';
import './side-effect';

export interface Shape {
  kind: string;
}
)");
    REQUIRE(tree.roots.size() == 4);
    const auto* imp0 = std::get_if<ts::ImportDecl>(&tree.roots[0]);
    REQUIRE(imp0 != nullptr);
    CHECK(imp0->module == "@angular/core");
    REQUIRE(imp0->names.size() == 2);
    CHECK(imp0->names[0] == "Component");
    CHECK(imp0->names[1] == "In");
    const auto* imp1 = std::get_if<ts::ImportDecl>(&tree.roots[1]);
    REQUIRE(imp1 != nullptr);
    CHECK(imp1->module == "./default");
    CHECK(imp1->names == std::vector<std::string>{"Default"});
    const auto* iface = std::get_if<ts::InterfaceDecl>(&tree.roots[3]);
    REQUIRE(iface != nullptr);
    CHECK(iface->name == "Shape");
}

TEST_CASE("parse error carries position and fails the file") {
    DiagnosticList diags;
    FileEntry entry{"broken.ts", FileKind::TypeScriptSource, 0};
    auto outcome = ts::parse_typescript(entry, "export class Broken {\n  run() {\n", diags);
    REQUIRE(outcome.error.has_value());
    CHECK(outcome.error->line == 1);
    CHECK_FALSE(outcome.tree.has_value());
}

TEST_CASE("invalid UTF-8 fails the file") {
    DiagnosticList diags;
    FileEntry entry{"bad.ts", FileKind::TypeScriptSource, 0};
    std::string source = "export class A {}\n";
    source += static_cast<char>(0xFF);
    auto outcome = ts::parse_typescript(entry, source, diags);
    REQUIRE(outcome.error.has_value());
    CHECK(outcome.error->message == "invalid UTF-8");
}

TEST_CASE("span round-trip: slicing the source reproduces node text") {
    std::string source = read_file(fixture_path("listings/inheritance/home.component.ts"));
    auto tree = parse_ok("home.component.ts", source);
    auto classes = all_classes(tree);
    REQUIRE(classes.size() == 2);
    const ts::ClassDecl& home = *classes[1];
    std::string decl_text =
        source.substr(home.class_span.begin, home.class_span.end - home.class_span.begin);
    CHECK(decl_text.rfind("export class HomeComponent", 0) == 0);
    CHECK(decl_text.back() == '}');
    std::string full_text = source.substr(home.span.begin, home.span.end - home.span.begin);
    CHECK(full_text.rfind("@Component", 0) == 0);
    for (const auto& site : tree.any_sites) {
        CHECK(site.span.begin < site.span.end);
        CHECK(site.span.end <= source.size());
    }
}

TEST_CASE("parsing is pure: identical source gives identical trees") {
    std::string source = read_file(fixture_path("listings/coupled_service/app-service.ts"));
    auto a = parse_ok("x.ts", source);
    auto b = parse_ok("x.ts", source);
    REQUIRE(a.roots.size() == b.roots.size());
    CHECK(a.any_sites.size() == b.any_sites.size());
    auto ca = all_classes(a);
    auto cb = all_classes(b);
    REQUIRE(ca.size() == cb.size());
    for (size_t i = 0; i < ca.size(); ++i) {
        CHECK(ca[i]->name == cb[i]->name);
        CHECK(ca[i]->span.begin == cb[i]->span.begin);
        CHECK(ca[i]->span.end == cb[i]->span.end);
        CHECK(ca[i]->properties.size() == cb[i]->properties.size());
        CHECK(ca[i]->methods.size() == cb[i]->methods.size());
    }
}

TEST_CASE("nested any forms inside composite annotations count") {
    auto tree = parse_ok("nested.ts", R"(export class N {
  onEvent: (payload: any) => void = () => {};
  box: { value: any; label: string } = { value: null, label: '' };
  loose: any | undefined;
})");
    CHECK(tree.any_sites.size() == 3);
}

TEST_CASE("arrow parameters and return annotations in bodies") {
    auto tree = parse_ok("arrows.ts", R"(export class A {
  run() {
    const f = (x: any): any => x;
    const g = y => y;
    return f(g(1));
  }
})");
    // (x: any) parameter and : any return
    CHECK(tree.any_sites.size() == 2);
}
