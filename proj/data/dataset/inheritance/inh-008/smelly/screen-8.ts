import { Component } from '@angular/core';

export abstract class BaseScreen8 {
  abstract screenTitle: string;

  announce(): void {
    console.log('entering ' + this.screenTitle);
  }
}

@Component({ selector: 'app-screen-8', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen8Component extends BaseScreen8 {
  screenTitle = 'Screen 8';
}
