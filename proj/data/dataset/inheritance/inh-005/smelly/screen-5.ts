import { Component } from '@angular/core';

export abstract class BaseScreen5 {
  abstract screenTitle: string;

  announce(): void {
    console.log('entering ' + this.screenTitle);
  }
}

@Component({ selector: 'app-screen-5', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen5Component extends BaseScreen5 {
  screenTitle = 'Screen 5';
}
