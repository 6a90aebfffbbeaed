#include "doctest.h"

#include "ngsmell/template_ast.hpp"

using namespace ngsmell;

namespace {

tpl::TemplateAst parse(const std::string& source) {
    DiagnosticList diags;
    return tpl::parse_template(source, diags);
}

}  // namespace

TEST_CASE("interpolation with a call expression") {
    auto ast = parse("<p>Total: {{ calculateTotal() }}</p>");
    REQUIRE(ast.interpolations.size() == 1);
    CHECK(ast.interpolations[0].expression == "calculateTotal()");
    REQUIRE(ast.elements.size() == 1);
    CHECK(ast.elements[0].tag == "p");
}

TEST_CASE("two-way binding") {
    auto ast = parse("<input [(ngModel)]=\"name\">");
    REQUIRE(ast.bindings.size() == 1);
    CHECK(ast.bindings[0].kind == tpl::BindingKind::TwoWay);
    CHECK(ast.bindings[0].target == "ngModel");
    CHECK(ast.bindings[0].expression == "name");
}

TEST_CASE("empty template") {
    auto ast = parse("");
    CHECK(ast.empty());
    CHECK(ast.elements.empty());
    CHECK(ast.interpolations.empty());
}

TEST_CASE("property, event, attribute, reference, structural") {
    auto ast = parse(R"tpl(<ul *ngIf="users.length > 0; else emptyList">
  <li *ngFor="let user of users">{{ user.name }}</li>
</ul>
<ng-template #emptyList>
  <p>No users available.</p>
</ng-template>
<button (click)="init()" [disabled]="busy" title="run">Go</button>)tpl");
    REQUIRE(ast.structural_directives.size() == 2);
    CHECK(ast.structural_directives[0].name == "ngIf");
    CHECK(ast.structural_directives[0].expression == "users.length > 0; else emptyList");
    CHECK(ast.structural_directives[1].name == "ngFor");
    CHECK(ast.structural_directives[1].expression == "let user of users");
    REQUIRE(ast.interpolations.size() == 1);
    CHECK(ast.interpolations[0].expression == "user.name");

    int property = 0, event = 0, attribute = 0;
    for (const auto& b : ast.bindings) {
        if (b.kind == tpl::BindingKind::Property) ++property;
        if (b.kind == tpl::BindingKind::Event) ++event;
        if (b.kind == tpl::BindingKind::Attribute) ++attribute;
    }
    CHECK(property == 1);
    CHECK(event == 1);
    CHECK(attribute == 1);

    bool found_ref = false;
    for (const auto& e : ast.elements) {
        for (const auto& r : e.references) {
            if (r == "emptyList") found_ref = true;
        }
    }
    CHECK(found_ref);
}

TEST_CASE("element tree nesting") {
    auto ast = parse("<div><span>a</span><p>b</p></div><footer></footer>");
    REQUIRE(ast.elements.size() == 4);
    REQUIRE(ast.roots.size() == 2);
    CHECK(ast.elements[ast.roots[0]].tag == "div");
    CHECK(ast.elements[ast.roots[1]].tag == "footer");
    REQUIRE(ast.elements[ast.roots[0]].children.size() == 2);
}

TEST_CASE("spans lie within the template source and slice back") {
    std::string source = "<p>{{ a }}</p><input [x]=\"b\">";
    auto ast = parse(source);
    REQUIRE(ast.interpolations.size() == 1);
    auto ispan = ast.interpolations[0].span;
    CHECK(source.substr(ispan.begin, ispan.end - ispan.begin) == "{{ a }}");
    REQUIRE(ast.bindings.size() == 1);
    auto bspan = ast.bindings[0].span;
    CHECK(source.substr(bspan.begin, bspan.end - bspan.begin) == "[x]=\"b\"");
    for (const auto& e : ast.elements) CHECK(e.span.end <= source.size());
}

TEST_CASE("malformed fragments are skipped with diagnostics, never fatal") {
    DiagnosticList diags;
    auto ast = tpl::parse_template("<div [broken=\"x\"><p>{{ ok }}</p>", diags);
    CHECK(ast.interpolations.size() == 1);
    CHECK(ast.interpolations[0].expression == "ok");
    CHECK_FALSE(diags.empty());
}

TEST_CASE("interpolation containing a comparison is plain text, not a tag") {
    auto ast = parse("<p>{{ total < 10 }}</p>");
    REQUIRE(ast.interpolations.size() == 1);
    CHECK(ast.interpolations[0].expression == "total < 10");
    CHECK(ast.elements.size() == 1);
}

TEST_CASE("interpolations inside plain attribute values") {
    auto ast = parse("<img title=\"{{ name }}\" src=\"x.png\">");
    REQUIRE(ast.interpolations.size() == 1);
    CHECK(ast.interpolations[0].expression == "name");
}

TEST_CASE("self-closing and void tags do not nest") {
    auto ast = parse("<div><br><img src=\"x\"/><span>t</span></div>");
    REQUIRE(ast.roots.size() == 1);
    const auto& div = ast.elements[ast.roots[0]];
    CHECK(div.children.size() == 3);
}
