import { Component } from '@angular/core';

export abstract class BaseScreen2 {
  abstract screenTitle: string;

  announce(): void {
    console.log('entering ' + this.screenTitle);
  }
}

@Component({ selector: 'app-screen-2', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen2Component extends BaseScreen2 {
  screenTitle = 'Screen 2';
}
