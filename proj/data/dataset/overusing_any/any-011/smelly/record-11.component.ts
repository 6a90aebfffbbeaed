import { Component } from '@angular/core';

@Component({
  selector: 'app-record-11',
  template: '<p>{{ title }}</p>'
})

export class Record11Component {
  title = 'record';
  hooks: ((event: string) => string)[] = [];

  watch0(): void { this.hooks.push((event: any) => String(event)); }
  coerce1(raw: string) { return JSON.parse(raw) as any; }
  snapshot2(): any { return this.title; }
  field3: any;
}
