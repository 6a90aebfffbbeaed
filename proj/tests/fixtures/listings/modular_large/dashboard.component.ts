import { Component } from '@angular/core';

@Component({
  selector: 'app-dashboard',
  templateUrl: './dashboard.component.html'
})
export class DashboardComponent {
  steps: string[] = [];

  loadUserData() {
    this.steps.push('loadUserData step 0');
    this.steps.push('loadUserData step 1');
    this.steps.push('loadUserData step 2');
    this.steps.push('loadUserData step 3');
    this.steps.push('loadUserData step 4');
    this.steps.push('loadUserData step 5');
    this.steps.push('loadUserData step 6');
    this.steps.push('loadUserData step 7');
    this.steps.push('loadUserData step 8');
    this.steps.push('loadUserData step 9');
    this.steps.push('loadUserData step 10');
    this.steps.push('loadUserData step 11');
    this.steps.push('loadUserData step 12');
    this.steps.push('loadUserData step 13');
    this.steps.push('loadUserData step 14');
    this.steps.push('loadUserData step 15');
    this.steps.push('loadUserData step 16');
    this.steps.push('loadUserData step 17');
    this.steps.push('loadUserData step 18');
    this.steps.push('loadUserData step 19');
    this.steps.push('loadUserData step 20');
    this.steps.push('loadUserData step 21');
    this.steps.push('loadUserData step 22');
    this.steps.push('loadUserData step 23');
    this.steps.push('loadUserData step 24');
    this.steps.push('loadUserData step 25');
    this.steps.push('loadUserData step 26');
    this.steps.push('loadUserData step 27');
    this.steps.push('loadUserData step 28');
    this.steps.push('loadUserData step 29');
    this.steps.push('loadUserData step 30');
    this.steps.push('loadUserData step 31');
    this.steps.push('loadUserData step 32');
    this.steps.push('loadUserData step 33');
    this.steps.push('loadUserData step 34');
    this.steps.push('loadUserData step 35');
    this.steps.push('loadUserData step 36');
    this.steps.push('loadUserData step 37');
  }

  loadStatistics() {
    this.steps.push('loadStatistics step 0');
    this.steps.push('loadStatistics step 1');
    this.steps.push('loadStatistics step 2');
    this.steps.push('loadStatistics step 3');
    this.steps.push('loadStatistics step 4');
    this.steps.push('loadStatistics step 5');
    this.steps.push('loadStatistics step 6');
    this.steps.push('loadStatistics step 7');
    this.steps.push('loadStatistics step 8');
    this.steps.push('loadStatistics step 9');
    this.steps.push('loadStatistics step 10');
    this.steps.push('loadStatistics step 11');
    this.steps.push('loadStatistics step 12');
    this.steps.push('loadStatistics step 13');
    this.steps.push('loadStatistics step 14');
    this.steps.push('loadStatistics step 15');
    this.steps.push('loadStatistics step 16');
    this.steps.push('loadStatistics step 17');
    this.steps.push('loadStatistics step 18');
    this.steps.push('loadStatistics step 19');
    this.steps.push('loadStatistics step 20');
    this.steps.push('loadStatistics step 21');
    this.steps.push('loadStatistics step 22');
    this.steps.push('loadStatistics step 23');
    this.steps.push('loadStatistics step 24');
    this.steps.push('loadStatistics step 25');
    this.steps.push('loadStatistics step 26');
    this.steps.push('loadStatistics step 27');
    this.steps.push('loadStatistics step 28');
    this.steps.push('loadStatistics step 29');
    this.steps.push('loadStatistics step 30');
    this.steps.push('loadStatistics step 31');
    this.steps.push('loadStatistics step 32');
    this.steps.push('loadStatistics step 33');
    this.steps.push('loadStatistics step 34');
    this.steps.push('loadStatistics step 35');
    this.steps.push('loadStatistics step 36');
    this.steps.push('loadStatistics step 37');
  }

  handleFilters() {
    this.steps.push('handleFilters step 0');
    this.steps.push('handleFilters step 1');
    this.steps.push('handleFilters step 2');
    this.steps.push('handleFilters step 3');
    this.steps.push('handleFilters step 4');
    this.steps.push('handleFilters step 5');
    this.steps.push('handleFilters step 6');
    this.steps.push('handleFilters step 7');
    this.steps.push('handleFilters step 8');
    this.steps.push('handleFilters step 9');
    this.steps.push('handleFilters step 10');
    this.steps.push('handleFilters step 11');
    this.steps.push('handleFilters step 12');
    this.steps.push('handleFilters step 13');
    this.steps.push('handleFilters step 14');
    this.steps.push('handleFilters step 15');
    this.steps.push('handleFilters step 16');
    this.steps.push('handleFilters step 17');
    this.steps.push('handleFilters step 18');
    this.steps.push('handleFilters step 19');
    this.steps.push('handleFilters step 20');
    this.steps.push('handleFilters step 21');
    this.steps.push('handleFilters step 22');
    this.steps.push('handleFilters step 23');
    this.steps.push('handleFilters step 24');
    this.steps.push('handleFilters step 25');
    this.steps.push('handleFilters step 26');
    this.steps.push('handleFilters step 27');
    this.steps.push('handleFilters step 28');
    this.steps.push('handleFilters step 29');
    this.steps.push('handleFilters step 30');
    this.steps.push('handleFilters step 31');
    this.steps.push('handleFilters step 32');
    this.steps.push('handleFilters step 33');
    this.steps.push('handleFilters step 34');
    this.steps.push('handleFilters step 35');
    this.steps.push('handleFilters step 36');
    this.steps.push('handleFilters step 37');
  }

  updateViewState() {
    this.steps.push('updateViewState step 0');
    this.steps.push('updateViewState step 1');
    this.steps.push('updateViewState step 2');
    this.steps.push('updateViewState step 3');
    this.steps.push('updateViewState step 4');
    this.steps.push('updateViewState step 5');
    this.steps.push('updateViewState step 6');
    this.steps.push('updateViewState step 7');
    this.steps.push('updateViewState step 8');
    this.steps.push('updateViewState step 9');
    this.steps.push('updateViewState step 10');
    this.steps.push('updateViewState step 11');
    this.steps.push('updateViewState step 12');
    this.steps.push('updateViewState step 13');
    this.steps.push('updateViewState step 14');
    this.steps.push('updateViewState step 15');
    this.steps.push('updateViewState step 16');
    this.steps.push('updateViewState step 17');
    this.steps.push('updateViewState step 18');
    this.steps.push('updateViewState step 19');
    this.steps.push('updateViewState step 20');
    this.steps.push('updateViewState step 21');
    this.steps.push('updateViewState step 22');
    this.steps.push('updateViewState step 23');
    this.steps.push('updateViewState step 24');
    this.steps.push('updateViewState step 25');
    this.steps.push('updateViewState step 26');
    this.steps.push('updateViewState step 27');
    this.steps.push('updateViewState step 28');
    this.steps.push('updateViewState step 29');
    this.steps.push('updateViewState step 30');
    this.steps.push('updateViewState step 31');
    this.steps.push('updateViewState step 32');
    this.steps.push('updateViewState step 33');
    this.steps.push('updateViewState step 34');
    this.steps.push('updateViewState step 35');
    this.steps.push('updateViewState step 36');
    this.steps.push('updateViewState step 37');
  }

  exportReport() {
    this.steps.push('exportReport step 0');
    this.steps.push('exportReport step 1');
    this.steps.push('exportReport step 2');
    this.steps.push('exportReport step 3');
    this.steps.push('exportReport step 4');
    this.steps.push('exportReport step 5');
    this.steps.push('exportReport step 6');
    this.steps.push('exportReport step 7');
    this.steps.push('exportReport step 8');
    this.steps.push('exportReport step 9');
    this.steps.push('exportReport step 10');
    this.steps.push('exportReport step 11');
    this.steps.push('exportReport step 12');
    this.steps.push('exportReport step 13');
    this.steps.push('exportReport step 14');
    this.steps.push('exportReport step 15');
    this.steps.push('exportReport step 16');
    this.steps.push('exportReport step 17');
    this.steps.push('exportReport step 18');
    this.steps.push('exportReport step 19');
    this.steps.push('exportReport step 20');
    this.steps.push('exportReport step 21');
    this.steps.push('exportReport step 22');
    this.steps.push('exportReport step 23');
    this.steps.push('exportReport step 24');
    this.steps.push('exportReport step 25');
    this.steps.push('exportReport step 26');
    this.steps.push('exportReport step 27');
    this.steps.push('exportReport step 28');
    this.steps.push('exportReport step 29');
    this.steps.push('exportReport step 30');
    this.steps.push('exportReport step 31');
    this.steps.push('exportReport step 32');
    this.steps.push('exportReport step 33');
    this.steps.push('exportReport step 34');
    this.steps.push('exportReport step 35');
    this.steps.push('exportReport step 36');
    this.steps.push('exportReport step 37');
  }

}
