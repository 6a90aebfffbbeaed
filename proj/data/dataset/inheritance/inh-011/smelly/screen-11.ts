import { Component } from '@angular/core';

export abstract class BaseScreen11 {
  abstract screenTitle: string;

  announce(): void {
    console.log('entering ' + this.screenTitle);
  }
}

@Component({ selector: 'app-screen-11', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen11Component extends BaseScreen11 {
  screenTitle = 'Screen 11';
}
