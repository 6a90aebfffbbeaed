import { Component } from '@angular/core';
import { UserService } from './user.service';

interface User {
  id: number;
  name: string;
}

@Component({
  selector: 'app-user-profile',
  template: '<p>{{ user?.name }}</p>'
})
export class UserProfileComponent {
  user: User | null = null;
  users: User[] = [];

  constructor(private userService: UserService) {}

  loadUser(id: number): void {
    this.userService.getUser(id).subscribe((data: User) => {
      this.user = data;
      this.processUserData(data);
    });
  }

  processUserData(data: User): User {
    return data;
  }
}
