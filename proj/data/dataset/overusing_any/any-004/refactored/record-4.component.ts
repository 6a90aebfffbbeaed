import { Component } from '@angular/core';

@Component({
  selector: 'app-record-4',
  template: '<p>{{ title }}</p>'
})

export class Record4Component {
  title = 'record';
  hooks: ((event: string) => string)[] = [];

  watch0(): void { this.hooks.push((event: string) => event); }
}
