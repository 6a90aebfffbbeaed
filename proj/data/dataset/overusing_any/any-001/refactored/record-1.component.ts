import { Component } from '@angular/core';

@Component({
  selector: 'app-record-1',
  template: '<p>{{ title }}</p>'
})

export class Record1Component {
  title = 'record';
  hooks: ((event: string) => string)[] = [];

  items0: number[] = [];
  rows1: Array<string> = [];
}
