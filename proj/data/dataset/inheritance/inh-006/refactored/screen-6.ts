import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class Screen6Announcer {
  announce(title: string): void {
    console.log('entering ' + title);
  }
}

@Component({ selector: 'app-screen-6', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen6Component {
  screenTitle = 'Screen 6';

  constructor(private announcer: Screen6Announcer) {
    this.announcer.announce(this.screenTitle);
  }
}
