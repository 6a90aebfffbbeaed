import { Component } from '@angular/core';

@Component({
  selector: 'app-record-7',
  template: '<p>{{ title }}</p>'
})

export class Record7Component {
  title = 'record';
  hooks: ((event: string) => string)[] = [];

  field0: string | null = null;
  items1: number[] = [];
  rows2: Array<string> = [];
  take3(value: string): void { this.title = value; }
}
