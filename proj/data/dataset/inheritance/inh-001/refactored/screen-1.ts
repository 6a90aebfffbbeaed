import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class Screen1Announcer {
  announce(title: string): void {
    console.log('entering ' + title);
  }
}

@Component({ selector: 'app-screen-1', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen1Component {
  screenTitle = 'Screen 1';

  constructor(private announcer: Screen1Announcer) {
    this.announcer.announce(this.screenTitle);
  }
}
