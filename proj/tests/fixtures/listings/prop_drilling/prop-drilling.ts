import { Component, Input } from '@angular/core';

@Component({
  selector: 'app-parent',
  template: `<app-child-a [data]="info"></app-child-a>`
})
export class ParentComponent {
  info = { message: 'Hello World' };
}

@Component({
  selector: 'app-child-a',
  template: `<app-child-b [data]="data"></app-child-b>`
})
export class ChildComponentA {
  @Input() data!: any;
}

@Component({
  selector: 'app-child-b',
  template: `<app-child-c [data]="data"></app-child-c>`
})
export class ChildComponentB {
  @Input() data!: any;
}

@Component({
  selector: 'app-child-c',
  template: `<p>{{ data.message }}</p>`
})
export class ChildComponentC {
  @Input() data!: any;
}
