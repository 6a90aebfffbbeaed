import { Component } from '@angular/core';

@Component({
  selector: 'app-record-0',
  template: '<p>{{ title }}</p>'
})

export class Record0Component {
  title = 'record';
  hooks: ((event: string) => string)[] = [];

  field0: any;
}
