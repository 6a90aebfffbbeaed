import { Component } from '@angular/core';

@Component({
  selector: 'app-record-2',
  template: '<p>{{ title }}</p>'
})

export class Record2Component {
  title = 'record';
  hooks: ((event: string) => string)[] = [];

  rows0: Array<string> = [];
  take1(value: string): void { this.title = value; }
  watch2(): void { this.hooks.push((event: string) => event); }
}
