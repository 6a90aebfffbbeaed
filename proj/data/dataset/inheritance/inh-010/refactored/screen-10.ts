import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class Screen10Announcer {
  announce(title: string): void {
    console.log('entering ' + title);
  }
}

@Component({ selector: 'app-screen-10', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen10Component {
  screenTitle = 'Screen 10';

  constructor(private announcer: Screen10Announcer) {
    this.announcer.announce(this.screenTitle);
  }
}
