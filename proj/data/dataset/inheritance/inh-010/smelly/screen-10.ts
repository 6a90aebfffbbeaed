import { Component } from '@angular/core';

export abstract class BaseScreen10 {
  abstract screenTitle: string;

  announce(): void {
    console.log('entering ' + this.screenTitle);
  }
}

@Component({ selector: 'app-screen-10', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen10Component extends BaseScreen10 {
  screenTitle = 'Screen 10';
}
