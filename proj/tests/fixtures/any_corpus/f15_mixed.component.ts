import { Component, Input } from '@angular/core';

@Component({ selector: 'app-mixed', template: '<div>{{ data }}</div>' })
export class MixedComponent {
  @Input() data!: any;
  history: string[] = [];

  record(entry: { when: Date }): void {
    this.history.push(String(entry.when));
  }
}
