import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class Screen7Announcer {
  announce(title: string): void {
    console.log('entering ' + title);
  }
}

@Component({ selector: 'app-screen-7', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen7Component {
  screenTitle = 'Screen 7';

  constructor(private announcer: Screen7Announcer) {
    this.announcer.announce(this.screenTitle);
  }
}
