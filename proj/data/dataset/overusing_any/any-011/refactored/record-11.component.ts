import { Component } from '@angular/core';

@Component({
  selector: 'app-record-11',
  template: '<p>{{ title }}</p>'
})

export class Record11Component {
  title = 'record';
  hooks: ((event: string) => string)[] = [];

  watch0(): void { this.hooks.push((event: string) => event); }
  coerce1(raw: string): unknown { return JSON.parse(raw); }
  snapshot2(): string { return this.title; }
  field3: string | null = null;
}
