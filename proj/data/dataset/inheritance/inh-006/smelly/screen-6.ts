import { Component } from '@angular/core';

export abstract class BaseScreen6 {
  abstract screenTitle: string;

  announce(): void {
    console.log('entering ' + this.screenTitle);
  }
}

@Component({ selector: 'app-screen-6', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen6Component extends BaseScreen6 {
  screenTitle = 'Screen 6';
}
