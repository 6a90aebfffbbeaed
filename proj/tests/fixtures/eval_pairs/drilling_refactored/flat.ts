import { Component, Input } from '@angular/core';

@Component({
  selector: 'app-flat-parent',
  template: '<app-flat-leaf [data]="info"></app-flat-leaf>'
})
export class FlatParentComponent {
  info = { message: 'Hello World' };
}

@Component({
  selector: 'app-flat-leaf',
  template: '<p>{{ data.message }}</p>'
})
export class FlatLeafComponent {
  @Input() data!: { message: string };
}
