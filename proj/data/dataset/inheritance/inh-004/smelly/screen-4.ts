import { Component } from '@angular/core';

export abstract class BaseScreen4 {
  abstract screenTitle: string;

  announce(): void {
    console.log('entering ' + this.screenTitle);
  }
}

@Component({ selector: 'app-screen-4', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen4Component extends BaseScreen4 {
  screenTitle = 'Screen 4';
}
