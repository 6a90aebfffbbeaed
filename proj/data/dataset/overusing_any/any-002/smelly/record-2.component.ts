import { Component } from '@angular/core';

@Component({
  selector: 'app-record-2',
  template: '<p>{{ title }}</p>'
})

export class Record2Component {
  title = 'record';
  hooks: ((event: string) => string)[] = [];

  rows0: Array<any> = [];
  take1(value: any): void { this.title = String(value); }
  watch2(): void { this.hooks.push((event: any) => String(event)); }
}
