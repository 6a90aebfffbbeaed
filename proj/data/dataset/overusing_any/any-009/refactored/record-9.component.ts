import { Component } from '@angular/core';

@Component({
  selector: 'app-record-9',
  template: '<p>{{ title }}</p>'
})

export class Record9Component {
  title = 'record';
  hooks: ((event: string) => string)[] = [];

  rows0: Array<string> = [];
  take1(value: string): void { this.title = value; }
}
