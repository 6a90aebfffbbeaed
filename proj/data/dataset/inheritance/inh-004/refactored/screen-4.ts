import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class Screen4Announcer {
  announce(title: string): void {
    console.log('entering ' + title);
  }
}

@Component({ selector: 'app-screen-4', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen4Component {
  screenTitle = 'Screen 4';

  constructor(private announcer: Screen4Announcer) {
    this.announcer.announce(this.screenTitle);
  }
}
