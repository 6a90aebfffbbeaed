import { Component } from '@angular/core';

@Component({
  selector: 'app-record-5',
  template: '<p>{{ title }}</p>'
})

export class Record5Component {
  title = 'record';
  hooks: ((event: string) => string)[] = [];

  coerce0(raw: string) { return JSON.parse(raw) as any; }
  snapshot1(): any { return this.title; }
}
