import { Component } from '@angular/core';

@Component({
  selector: 'app-record-5',
  template: '<p>{{ title }}</p>'
})

export class Record5Component {
  title = 'record';
  hooks: ((event: string) => string)[] = [];

  coerce0(raw: string): unknown { return JSON.parse(raw); }
  snapshot1(): string { return this.title; }
}
