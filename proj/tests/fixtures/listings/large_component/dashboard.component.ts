import { Component } from '@angular/core';
import { LogService } from './log.service';
import { UserService } from './user.service';

@Component({
  selector: 'app-dashboard',
  templateUrl: './dashboard.component.html'
})
export class DashboardComponent {
  users: User[] = [];
  logs: string[] = [];
  chartData: number[] = [];

  constructor(private userService: UserService, private logService: LogService) {}

  ngOnInit() {
    this.loadUsers();
    this.loadLogs();
    this.generateChartData();
  }

  loadUsers() { /* ... */ }
  loadLogs() { /* ... */ }
  generateChartData() { /* ... */ }
}
