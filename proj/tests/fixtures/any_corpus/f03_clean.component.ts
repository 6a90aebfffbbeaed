import { Component } from '@angular/core';

@Component({ selector: 'app-clean', template: '<p>clean</p>' })
export class CleanComponent {
  anyValue = 1;
  manyThings: string[] = [];
  company = 'Anyhow';

  anywhere(): string {
    return this.company;
  }
}
