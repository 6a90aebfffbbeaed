import { Component } from '@angular/core';

export abstract class BaseScreen9 {
  abstract screenTitle: string;

  announce(): void {
    console.log('entering ' + this.screenTitle);
  }
}

@Component({ selector: 'app-screen-9', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen9Component extends BaseScreen9 {
  screenTitle = 'Screen 9';
}
