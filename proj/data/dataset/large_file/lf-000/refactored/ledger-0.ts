import { Component } from '@angular/core';

@Component({
  selector: 'app-ledger-0',
  template: '<p>{{ title }}</p>'
})
export class Ledger0Component {
  entries: string[] = [];

  entry0(): void {
    this.entries.push('entry 0');
  }
  entry1(): void {
    this.entries.push('entry 1');
  }
  entry2(): void {
    this.entries.push('entry 2');
  }
  entry3(): void {
    this.entries.push('entry 3');
  }
  entry4(): void {
    this.entries.push('entry 4');
  }
  entry5(): void {
    this.entries.push('entry 5');
  }
  entry6(): void {
    this.entries.push('entry 6');
  }
  entry7(): void {
    this.entries.push('entry 7');
  }
  entry8(): void {
    this.entries.push('entry 8');
  }
  entry9(): void {
    this.entries.push('entry 9');
  }
  entry10(): void {
    this.entries.push('entry 10');
  }
  entry11(): void {
    this.entries.push('entry 11');
  }
  entry12(): void {
    this.entries.push('entry 12');
  }
  entry13(): void {
    this.entries.push('entry 13');
  }
  entry14(): void {
    this.entries.push('entry 14');
  }
  entry15(): void {
    this.entries.push('entry 15');
  }
  entry16(): void {
    this.entries.push('entry 16');
  }
  entry17(): void {
    this.entries.push('entry 17');
  }
  entry18(): void {
    this.entries.push('entry 18');
  }
  entry19(): void {
    this.entries.push('entry 19');
  }
  entry20(): void {
    this.entries.push('entry 20');
  }
  entry21(): void {
    this.entries.push('entry 21');
  }
  entry22(): void {
    this.entries.push('entry 22');
  }
  entry23(): void {
    this.entries.push('entry 23');
  }
  entry24(): void {
    this.entries.push('entry 24');
  }
  entry25(): void {
    this.entries.push('entry 25');
  }
  entry26(): void {
    this.entries.push('entry 26');
  }
  entry27(): void {
    this.entries.push('entry 27');
  }
  entry28(): void {
    this.entries.push('entry 28');
  }
  entry29(): void {
    this.entries.push('entry 29');
  }
  entry30(): void {
    this.entries.push('entry 30');
  }
  entry31(): void {
    this.entries.push('entry 31');
  }
  entry32(): void {
    this.entries.push('entry 32');
  }
  entry33(): void {
    this.entries.push('entry 33');
  }
  entry34(): void {
    this.entries.push('entry 34');
  }
  entry35(): void {
    this.entries.push('entry 35');
  }
  entry36(): void {
    this.entries.push('entry 36');
  }
  entry37(): void {
    this.entries.push('entry 37');
  }
  entry38(): void {
    this.entries.push('entry 38');
  }
  entry39(): void {
    this.entries.push('entry 39');
  }
  entry40(): void {
    this.entries.push('entry 40');
  }
  entry41(): void {
    this.entries.push('entry 41');
  }
  entry42(): void {
    this.entries.push('entry 42');
  }
  entry43(): void {
    this.entries.push('entry 43');
  }
  entry44(): void {
    this.entries.push('entry 44');
  }
  entry45(): void {
    this.entries.push('entry 45');
  }
  entry46(): void {
    this.entries.push('entry 46');
  }
  entry47(): void {
    this.entries.push('entry 47');
  }
  entry48(): void {
    this.entries.push('entry 48');
  }
  entry49(): void {
    this.entries.push('entry 49');
  }
  entry50(): void {
    this.entries.push('entry 50');
  }
  entry51(): void {
    this.entries.push('entry 51');
  }
  entry52(): void {
    this.entries.push('entry 52');
  }
  entry53(): void {
    this.entries.push('entry 53');
  }
  entry54(): void {
    this.entries.push('entry 54');
  }
  entry55(): void {
    this.entries.push('entry 55');
  }
  entry56(): void {
    this.entries.push('entry 56');
  }
  entry57(): void {
    this.entries.push('entry 57');
  }
  entry58(): void {
    this.entries.push('entry 58');
  }
  entry59(): void {
    this.entries.push('entry 59');
  }
  entry60(): void {
    this.entries.push('entry 60');
  }
  entry61(): void {
    this.entries.push('entry 61');
  }
  entry62(): void {
    this.entries.push('entry 62');
  }
  entry63(): void {
    this.entries.push('entry 63');
  }
  entry64(): void {
    this.entries.push('entry 64');
  }
  entry65(): void {
    this.entries.push('entry 65');
  }
}
