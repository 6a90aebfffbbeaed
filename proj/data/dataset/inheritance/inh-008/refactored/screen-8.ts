import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class Screen8Announcer {
  announce(title: string): void {
    console.log('entering ' + title);
  }
}

@Component({ selector: 'app-screen-8', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen8Component {
  screenTitle = 'Screen 8';

  constructor(private announcer: Screen8Announcer) {
    this.announcer.announce(this.screenTitle);
  }
}
