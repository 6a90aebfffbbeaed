#!/usr/bin/env python3
"""Regenerates the seeded smelly/refactored dataset under data/dataset/.

Each evaluated smell gets 12 instance pairs. The smelly variant is built to
trip its detector at the default thresholds; the refactored variant removes
the smell while keeping the component's surface. Deterministic: mechanical
index-driven variations only, no randomness.
"""

import json
import shutil
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent / "data" / "dataset"
PAIRS_PER_SMELL = 12

ANY_FORMS = ["property", "array", "generic_array", "parameter", "callback", "cast", "return"]


def component_header(selector: str, template: str = "<p>{{ title }}</p>") -> str:
    return (
        "import { Component } from '@angular/core';\n\n"
        "@Component({\n"
        f"  selector: '{selector}',\n"
        f"  template: '{template}'\n"
        "})\n"
    )


def make_any_pair(i: int):
    """Explicit any usages in rotating positions vs. typed equivalents."""
    name = f"Record{i}Component"
    selector = f"app-record-{i}"
    forms = [ANY_FORMS[(i + k) % len(ANY_FORMS)] for k in range(1 + i % 4)]

    smelly_members = []
    typed_members = []
    for k, form in enumerate(forms):
        if form == "property":
            smelly_members.append(f"  field{k}: any;")
            typed_members.append(f"  field{k}: string | null = null;")
        elif form == "array":
            smelly_members.append(f"  items{k}: any[] = [];")
            typed_members.append(f"  items{k}: number[] = [];")
        elif form == "generic_array":
            smelly_members.append(f"  rows{k}: Array<any> = [];")
            typed_members.append(f"  rows{k}: Array<string> = [];")
        elif form == "parameter":
            smelly_members.append(f"  take{k}(value: any): void {{ this.title = String(value); }}")
            typed_members.append(f"  take{k}(value: string): void {{ this.title = value; }}")
        elif form == "callback":
            smelly_members.append(
                f"  watch{k}(): void {{ this.hooks.push((event: any) => String(event)); }}"
            )
            typed_members.append(
                f"  watch{k}(): void {{ this.hooks.push((event: string) => event); }}"
            )
        elif form == "cast":
            smelly_members.append(
                f"  coerce{k}(raw: string) {{ return JSON.parse(raw) as any; }}"
            )
            typed_members.append(
                f"  coerce{k}(raw: string): unknown {{ return JSON.parse(raw); }}"
            )
        elif form == "return":
            smelly_members.append(f"  snapshot{k}(): any {{ return this.title; }}")
            typed_members.append(f"  snapshot{k}(): string {{ return this.title; }}")

    def build(members):
        body = [
            component_header(selector),
            f"export class {name} {{",
            "  title = 'record';",
            "  hooks: ((event: string) => string)[] = [];",
            "",
        ]
        body.extend(members)
        body.append("}")
        return "\n".join(body) + "\n"

    return {f"record-{i}.component.ts": build(smelly_members)}, {
        f"record-{i}.component.ts": build(typed_members)
    }


def make_large_component_pair(i: int):
    """A component padded past 200 lines vs. the logic moved to a service."""
    name = f"Board{i}Component"
    selector = f"app-board-{i}"
    target_loc = 205 + 10 * i
    header = component_header(selector)
    header_lines = header.count("\n")

    lines = [header.rstrip("\n")]
    lines.append(f"export class {name} {{")
    lines.append("  steps: string[] = [];")
    lines.append("")
    body_budget = target_loc - (header_lines - 2) - 4  # class header + scaffold + brace
    method = 0
    while body_budget > 0:
        chunk = min(body_budget, 20)
        lines.append(f"  stage{method}() {{")
        for j in range(chunk - 2):
            lines.append(f"    this.steps.push('stage {method} step {j}');")
        lines.append("  }")
        body_budget -= chunk
        method += 1
    lines.append("}")
    smelly = "\n".join(lines) + "\n"

    refactored_component = (
        component_header(selector)
        + f"export class {name} {{\n"
        + "  constructor(private pipeline: Board" + str(i) + "PipelineService) {}\n\n"
        + "  run(): void {\n"
        + "    this.pipeline.runAll();\n"
        + "  }\n"
        + "}\n"
    )
    service_lines = [
        "import { Injectable } from '@angular/core';",
        "",
        "@Injectable({ providedIn: 'root' })",
        f"export class Board{i}PipelineService {{",
        "  steps: string[] = [];",
        "",
    ]
    for m in range(method):
        service_lines.append(f"  stage{m}(): void {{")
        service_lines.append(f"    this.steps.push('stage {m}');")
        service_lines.append("  }")
        service_lines.append("")
    service_lines.append("  runAll(): void {")
    for m in range(method):
        service_lines.append(f"    this.stage{m}();")
    service_lines.append("  }")
    service_lines.append("}")

    return {f"board-{i}.component.ts": smelly}, {
        f"board-{i}.component.ts": refactored_component,
        f"board-{i}-pipeline.service.ts": "\n".join(service_lines) + "\n",
    }


def make_large_file_pair(i: int):
    """Alternates the LOC clause and the decorated-class-count clause."""
    if i % 2 == 0:
        # LOC clause: one long file vs. two halves
        target = 405 + 10 * i
        name = f"Ledger{i}Component"
        selector = f"app-ledger-{i}"
        lines = [component_header(selector).rstrip("\n"), f"export class {name} {{",
                 "  entries: string[] = [];", ""]
        m = 0
        while len(lines) < target - 2:
            lines.append(f"  entry{m}(): void {{")
            lines.append(f"    this.entries.push('entry {m}');")
            lines.append("  }")
            m += 1
        lines.append("}")
        smelly = {f"ledger-{i}.ts": "\n".join(lines) + "\n"}

        half = m // 2
        first = [component_header(selector).rstrip("\n"), f"export class {name} {{",
                 "  entries: string[] = [];", ""]
        for k in range(half):
            first.append(f"  entry{k}(): void {{")
            first.append(f"    this.entries.push('entry {k}');")
            first.append("  }")
        first.append("}")
        second = ["import { Injectable } from '@angular/core';", "",
                  "@Injectable({ providedIn: 'root' })",
                  f"export class Ledger{i}TailService {{",
                  "  entries: string[] = [];", ""]
        for k in range(half, m):
            second.append(f"  entry{k}(): void {{")
            second.append(f"    this.entries.push('entry {k}');")
            second.append("  }")
        second.append("}")
        refactored = {
            f"ledger-{i}.ts": "\n".join(first) + "\n",
            f"ledger-{i}-tail.service.ts": "\n".join(second) + "\n",
        }
        return smelly, refactored

    # class-count clause: 3-4 decorated classes in one file vs. one per file
    count = 3 + (i % 2)
    parts = []
    for k in range(count):
        if k % 2 == 0:
            parts.append(
                f"@Component({{ selector: 'app-part-{i}-{k}', template: '<p>part {k}</p>' }})\n"
                f"export class Part{i}x{k}Component {{ label = 'part {k}'; }}\n"
            )
        else:
            parts.append(
                "@Injectable({ providedIn: 'root' })\n"
                f"export class Part{i}x{k}Service {{\n"
                f"  tag(): string {{ return 'part {k}'; }}\n"
                "}\n"
            )
    header = "import { Component, Injectable } from '@angular/core';\n\n"
    smelly = {f"parts-{i}.ts": header + "\n".join(parts)}
    refactored = {}
    for k, part in enumerate(parts):
        refactored[f"part-{i}-{k}.ts"] = header + part
    return smelly, refactored


def make_inheritance_pair(i: int):
    """Component extending a local base class vs. composition via a service."""
    base = f"BaseScreen{i}"
    name = f"Screen{i}Component"
    selector = f"app-screen-{i}"
    smelly = (
        "import { Component } from '@angular/core';\n\n"
        f"export abstract class {base} {{\n"
        "  abstract screenTitle: string;\n\n"
        "  announce(): void {\n"
        "    console.log('entering ' + this.screenTitle);\n"
        "  }\n"
        "}\n\n"
        f"@Component({{ selector: '{selector}', template: '<h2>{{{{ screenTitle }}}}</h2>' }})\n"
        f"export class {name} extends {base} {{\n"
        f"  screenTitle = 'Screen {i}';\n"
        "}\n"
    )
    refactored = (
        "import { Component, Injectable } from '@angular/core';\n\n"
        "@Injectable({ providedIn: 'root' })\n"
        f"export class Screen{i}Announcer {{\n"
        "  announce(title: string): void {\n"
        "    console.log('entering ' + title);\n"
        "  }\n"
        "}\n\n"
        f"@Component({{ selector: '{selector}', template: '<h2>{{{{ screenTitle }}}}</h2>' }})\n"
        f"export class {name} {{\n"
        f"  screenTitle = 'Screen {i}';\n\n"
        f"  constructor(private announcer: Screen{i}Announcer) {{\n"
        "    this.announcer.announce(this.screenTitle);\n"
        "  }\n"
        "}\n"
    )
    return {f"screen-{i}.ts": smelly}, {f"screen-{i}.ts": refactored}


def make_too_many_inputs_pair(i: int):
    """6-9 @Input properties vs. one grouped options object."""
    count = 6 + i % 4
    name = f"Tile{i}Component"
    selector = f"app-tile-{i}"
    fields = [f"slot{k}" for k in range(count)]
    smelly_lines = [
        "import { Component, Input } from '@angular/core';",
        "",
        f"@Component({{ selector: '{selector}', template: '<div>{{{{ {fields[0]} }}}}</div>' }})",
        f"export class {name} {{",
    ]
    for field in fields:
        smelly_lines.append(f"  @Input() {field}!: string;")
    smelly_lines.append("}")

    iface = [f"export interface Tile{i}Options {{"]
    for field in fields:
        iface.append(f"  {field}: string;")
    iface.append("}")
    refactored_lines = [
        "import { Component, Input } from '@angular/core';",
        "",
        "\n".join(iface),
        "",
        f"@Component({{ selector: '{selector}', template: '<div>{{{{ options.{fields[0]} }}}}</div>' }})",
        f"export class {name} {{",
        f"  @Input() options!: Tile{i}Options;",
        "}",
    ]
    return {f"tile-{i}.ts": "\n".join(smelly_lines) + "\n"}, {
        f"tile-{i}.ts": "\n".join(refactored_lines) + "\n"
    }


GENERATORS = {
    "OverusingAnyType": ("overusing_any", "any", make_any_pair),
    "LargeComponent": ("large_component", "lc", make_large_component_pair),
    "LargeFile": ("large_file", "lf", make_large_file_pair),
    "InheritanceInsteadOfComposition": ("inheritance", "inh", make_inheritance_pair),
    "TooManyInputs": ("too_many_inputs", "tmi", make_too_many_inputs_pair),
}


def main():
    if ROOT.exists():
        shutil.rmtree(ROOT)
    manifest = []
    for smell, (directory, prefix, generator) in GENERATORS.items():
        for i in range(PAIRS_PER_SMELL):
            instance_id = f"{prefix}-{i:03d}"
            smelly_files, refactored_files = generator(i)
            for variant, files in (("smelly", smelly_files), ("refactored", refactored_files)):
                out_dir = ROOT / directory / instance_id / variant
                out_dir.mkdir(parents=True)
                for file_name, content in files.items():
                    (out_dir / file_name).write_text(content)
                manifest.append({
                    "id": instance_id,
                    "smell": smell,
                    "variant": variant,
                    "path": f"{directory}/{instance_id}/{variant}",
                })
    manifest.sort(key=lambda r: (r["smell"], r["id"], r["variant"]))
    (ROOT / "manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")
    print(f"wrote {len(manifest)} instances under {ROOT}")


if __name__ == "__main__":
    main()
