import { Component } from '@angular/core';

@Component({
  selector: 'app-record-10',
  template: '<p>{{ title }}</p>'
})

export class Record10Component {
  title = 'record';
  hooks: ((event: string) => string)[] = [];

  take0(value: any): void { this.title = String(value); }
  watch1(): void { this.hooks.push((event: any) => String(event)); }
  coerce2(raw: string) { return JSON.parse(raw) as any; }
}
