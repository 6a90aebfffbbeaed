import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class Screen0Announcer {
  announce(title: string): void {
    console.log('entering ' + title);
  }
}

@Component({ selector: 'app-screen-0', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen0Component {
  screenTitle = 'Screen 0';

  constructor(private announcer: Screen0Announcer) {
    this.announcer.announce(this.screenTitle);
  }
}
