import { Component } from '@angular/core';

@Component({
  selector: 'app-record-1',
  template: '<p>{{ title }}</p>'
})

export class Record1Component {
  title = 'record';
  hooks: ((event: string) => string)[] = [];

  items0: any[] = [];
  rows1: Array<any> = [];
}
