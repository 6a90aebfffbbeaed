import { Component } from '@angular/core';

export abstract class BaseScreen3 {
  abstract screenTitle: string;

  announce(): void {
    console.log('entering ' + this.screenTitle);
  }
}

@Component({ selector: 'app-screen-3', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen3Component extends BaseScreen3 {
  screenTitle = 'Screen 3';
}
