import { Component, ViewChild } from '@angular/core';

@Component({
  selector: 'app-child',
  template: `<p>{{ message }} - {{ count }}</p>`
})
export class ChildComponent {
  message = 'Init';
  count = 0;

  update(msg: string) {
    this.message = msg;
    this.count++;
  }

  reset() {
    this.message = 'Init';
    this.count = 0;
  }

  clear() {
    this.message = '';
  }
}

@Component({
  selector: 'app-parent',
  template: `
    <app-child></app-child>
    <button (click)="init()">Init</button>
    <button (click)="activate()">Activate</button>
    <button (click)="disable()">Disable</button>
    <button (click)="increment()">Increment</button>
    <button (click)="reset()">Reset</button>
  `
})
export class ParentComponent {
  @ViewChild(ChildComponent) child!: ChildComponent;

  updateChild() {
    this.child.update('Updated by parent');
  }

  resetChild() {
    this.child.reset();
  }

  clearChild() {
    this.child.clear();
  }
}
