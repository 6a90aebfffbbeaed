import { Component } from '@angular/core';

@Component({ selector: 'app-profile', template: '<p>{{ user }}</p>' })
export class ProfileComponent {
  user: any;
  tags: any[] = [];
  count: number = 0;
}
