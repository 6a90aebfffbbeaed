import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class Screen3Announcer {
  announce(title: string): void {
    console.log('entering ' + title);
  }
}

@Component({ selector: 'app-screen-3', template: '<h2>{{ screenTitle }}</h2>' })
export class Screen3Component {
  screenTitle = 'Screen 3';

  constructor(private announcer: Screen3Announcer) {
    this.announcer.announce(this.screenTitle);
  }
}
