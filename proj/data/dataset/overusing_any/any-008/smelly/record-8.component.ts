import { Component } from '@angular/core';

@Component({
  selector: 'app-record-8',
  template: '<p>{{ title }}</p>'
})

export class Record8Component {
  title = 'record';
  hooks: ((event: string) => string)[] = [];

  items0: any[] = [];
}
