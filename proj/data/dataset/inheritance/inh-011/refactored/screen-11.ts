import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class Screen11Announcer {
  announce(title: string): void {
    console.log('entering ' + title);
  }
}

@Component({ selector: 'app-screen-11', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen11Component {
  screenTitle = 'Screen 11';

  constructor(private announcer: Screen11Announcer) {
    this.announcer.announce(this.screenTitle);
  }
}
