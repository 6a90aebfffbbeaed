import { Component } from '@angular/core';

@Component({
  selector: 'app-record-6',
  template: '<p>{{ title }}</p>'
})

export class Record6Component {
  title = 'record';
  hooks: ((event: string) => string)[] = [];

  snapshot0(): any { return this.title; }
  field1: any;
  items2: any[] = [];
}
