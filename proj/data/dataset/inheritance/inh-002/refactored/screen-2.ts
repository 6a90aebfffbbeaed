import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class Screen2Announcer {
  announce(title: string): void {
    console.log('entering ' + title);
  }
}

@Component({ selector: 'app-screen-2', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen2Component {
  screenTitle = 'Screen 2';

  constructor(private announcer: Screen2Announcer) {
    this.announcer.announce(this.screenTitle);
  }
}
