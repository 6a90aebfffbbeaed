import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class AppService {
  getUser() { return { name: 'Bob' }; }
  getItems() { return [1, 2, 3]; }
}

@Component({
  selector: 'app-header',
  template: `<header>{{ user.name }}</header>`
})
export class HeaderComponent {
  user = this.appService.getUser();
  constructor(private appService: AppService) {}
}

@Component({
  selector: 'app-list',
  template: `<ul></ul>`
})
export class ListComponent {
  items = this.appService.getItems();
  constructor(private appService: AppService) {}
}
