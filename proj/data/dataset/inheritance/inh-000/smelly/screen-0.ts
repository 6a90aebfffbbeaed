import { Component } from '@angular/core';

export abstract class BaseScreen0 {
  abstract screenTitle: string;

  announce(): void {
    console.log('entering ' + this.screenTitle);
  }
}

@Component({ selector: 'app-screen-0', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen0Component extends BaseScreen0 {
  screenTitle = 'Screen 0';
}
