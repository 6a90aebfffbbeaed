import { Component } from '@angular/core';

@Component({
  selector: 'app-record-6',
  template: '<p>{{ title }}</p>'
})

export class Record6Component {
  title = 'record';
  hooks: ((event: string) => string)[] = [];

  snapshot0(): string { return this.title; }
  field1: string | null = null;
  items2: number[] = [];
}
