import { Component } from '@angular/core';

@Component({
  selector: 'app-record-3',
  template: '<p>{{ title }}</p>'
})

export class Record3Component {
  title = 'record';
  hooks: ((event: string) => string)[] = [];

  take0(value: string): void { this.title = value; }
  watch1(): void { this.hooks.push((event: string) => event); }
  coerce2(raw: string): unknown { return JSON.parse(raw); }
  snapshot3(): string { return this.title; }
}
