import { Component } from '@angular/core';

@Component({
  selector: 'app-record-7',
  template: '<p>{{ title }}</p>'
})

export class Record7Component {
  title = 'record';
  hooks: ((event: string) => string)[] = [];

  field0: any;
  items1: any[] = [];
  rows2: Array<any> = [];
  take3(value: any): void { this.title = String(value); }
}
