import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class Screen9Announcer {
  announce(title: string): void {
    console.log('entering ' + title);
  }
}

@Component({ selector: 'app-screen-9', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen9Component {
  screenTitle = 'Screen 9';

  constructor(private announcer: Screen9Announcer) {
    this.announcer.announce(this.screenTitle);
  }
}
