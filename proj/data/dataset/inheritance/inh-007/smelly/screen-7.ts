import { Component } from '@angular/core';

export abstract class BaseScreen7 {
  abstract screenTitle: string;

  announce(): void {
    console.log('entering ' + this.screenTitle);
  }
}

@Component({ selector: 'app-screen-7', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen7Component extends BaseScreen7 {
  screenTitle = 'Screen 7';
}
