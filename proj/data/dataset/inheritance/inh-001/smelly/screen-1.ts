import { Component } from '@angular/core';

export abstract class BaseScreen1 {
  abstract screenTitle: string;

  announce(): void {
    console.log('entering ' + this.screenTitle);
  }
}

@Component({ selector: 'app-screen-1', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen1Component extends BaseScreen1 {
  screenTitle = 'Screen 1';
}
