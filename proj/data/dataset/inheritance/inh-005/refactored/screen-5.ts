import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class Screen5Announcer {
  announce(title: string): void {
    console.log('entering ' + title);
  }
}

@Component({ selector: 'app-screen-5', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen5Component {
  screenTitle = 'Screen 5';

  constructor(private announcer: Screen5Announcer) {
    this.announcer.announce(this.screenTitle);
  }
}
