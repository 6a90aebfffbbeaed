import { Component } from '@angular/core';
import { UserService } from './user.service';

@Component({
  selector: 'app-user-profile',
  templateUrl: './app-user-profile.component.html'
})
export class UserProfileComponent {
  user: any;
  users: any[] = [];

  constructor(private userService: UserService) {}

  loadUser(id: any): void {
    this.userService.getUser(id).subscribe((data: any) => {
      this.user = data;
      this.processUserData(data);
    });
  }

  processUserData(data: any) {
    return data;
  }
}
