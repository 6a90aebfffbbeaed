import { Component, Input, Output, EventEmitter } from '@angular/core';

@Component({ selector: 'app-relay', template: '<span></span>' })
export class RelayComponent {
  @Input() source!: any;
  @Output() changed = new EventEmitter<string>();

  forward(next: any): void {
    this.changed.emit(String(next));
  }
}
