import { Component } from '@angular/core';

@Component({
  selector: 'app-board-2',
  template: '<p>{{ title }}</p>'
})
export class Board2Component {
  steps: string[] = [];

  stage0() {
    this.steps.push('stage 0 step 0');
    this.steps.push('stage 0 step 1');
    this.steps.push('stage 0 step 2');
    this.steps.push('stage 0 step 3');
    this.steps.push('stage 0 step 4');
    this.steps.push('stage 0 step 5');
    this.steps.push('stage 0 step 6');
    this.steps.push('stage 0 step 7');
    this.steps.push('stage 0 step 8');
    this.steps.push('stage 0 step 9');
    this.steps.push('stage 0 step 10');
    this.steps.push('stage 0 step 11');
    this.steps.push('stage 0 step 12');
    this.steps.push('stage 0 step 13');
    this.steps.push('stage 0 step 14');
    this.steps.push('stage 0 step 15');
    this.steps.push('stage 0 step 16');
    this.steps.push('stage 0 step 17');
  }
  stage1() {
    this.steps.push('stage 1 step 0');
    this.steps.push('stage 1 step 1');
    this.steps.push('stage 1 step 2');
    this.steps.push('stage 1 step 3');
    this.steps.push('stage 1 step 4');
    this.steps.push('stage 1 step 5');
    this.steps.push('stage 1 step 6');
    this.steps.push('stage 1 step 7');
    this.steps.push('stage 1 step 8');
    this.steps.push('stage 1 step 9');
    this.steps.push('stage 1 step 10');
    this.steps.push('stage 1 step 11');
    this.steps.push('stage 1 step 12');
    this.steps.push('stage 1 step 13');
    this.steps.push('stage 1 step 14');
    this.steps.push('stage 1 step 15');
    this.steps.push('stage 1 step 16');
    this.steps.push('stage 1 step 17');
  }
  stage2() {
    this.steps.push('stage 2 step 0');
    this.steps.push('stage 2 step 1');
    this.steps.push('stage 2 step 2');
    this.steps.push('stage 2 step 3');
    this.steps.push('stage 2 step 4');
    this.steps.push('stage 2 step 5');
    this.steps.push('stage 2 step 6');
    this.steps.push('stage 2 step 7');
    this.steps.push('stage 2 step 8');
    this.steps.push('stage 2 step 9');
    this.steps.push('stage 2 step 10');
    this.steps.push('stage 2 step 11');
    this.steps.push('stage 2 step 12');
    this.steps.push('stage 2 step 13');
    this.steps.push('stage 2 step 14');
    this.steps.push('stage 2 step 15');
    this.steps.push('stage 2 step 16');
    this.steps.push('stage 2 step 17');
  }
  stage3() {
    this.steps.push('stage 3 step 0');
    this.steps.push('stage 3 step 1');
    this.steps.push('stage 3 step 2');
    this.steps.push('stage 3 step 3');
    this.steps.push('stage 3 step 4');
    this.steps.push('stage 3 step 5');
    this.steps.push('stage 3 step 6');
    this.steps.push('stage 3 step 7');
    this.steps.push('stage 3 step 8');
    this.steps.push('stage 3 step 9');
    this.steps.push('stage 3 step 10');
    this.steps.push('stage 3 step 11');
    this.steps.push('stage 3 step 12');
    this.steps.push('stage 3 step 13');
    this.steps.push('stage 3 step 14');
    this.steps.push('stage 3 step 15');
    this.steps.push('stage 3 step 16');
    this.steps.push('stage 3 step 17');
  }
  stage4() {
    this.steps.push('stage 4 step 0');
    this.steps.push('stage 4 step 1');
    this.steps.push('stage 4 step 2');
    this.steps.push('stage 4 step 3');
    this.steps.push('stage 4 step 4');
    this.steps.push('stage 4 step 5');
    this.steps.push('stage 4 step 6');
    this.steps.push('stage 4 step 7');
    this.steps.push('stage 4 step 8');
    this.steps.push('stage 4 step 9');
    this.steps.push('stage 4 step 10');
    this.steps.push('stage 4 step 11');
    this.steps.push('stage 4 step 12');
    this.steps.push('stage 4 step 13');
    this.steps.push('stage 4 step 14');
    this.steps.push('stage 4 step 15');
    this.steps.push('stage 4 step 16');
    this.steps.push('stage 4 step 17');
  }
  stage5() {
    this.steps.push('stage 5 step 0');
    this.steps.push('stage 5 step 1');
    this.steps.push('stage 5 step 2');
    this.steps.push('stage 5 step 3');
    this.steps.push('stage 5 step 4');
    this.steps.push('stage 5 step 5');
    this.steps.push('stage 5 step 6');
    this.steps.push('stage 5 step 7');
    this.steps.push('stage 5 step 8');
    this.steps.push('stage 5 step 9');
    this.steps.push('stage 5 step 10');
    this.steps.push('stage 5 step 11');
    this.steps.push('stage 5 step 12');
    this.steps.push('stage 5 step 13');
    this.steps.push('stage 5 step 14');
    this.steps.push('stage 5 step 15');
    this.steps.push('stage 5 step 16');
    this.steps.push('stage 5 step 17');
  }
  stage6() {
    this.steps.push('stage 6 step 0');
    this.steps.push('stage 6 step 1');
    this.steps.push('stage 6 step 2');
    this.steps.push('stage 6 step 3');
    this.steps.push('stage 6 step 4');
    this.steps.push('stage 6 step 5');
    this.steps.push('stage 6 step 6');
    this.steps.push('stage 6 step 7');
    this.steps.push('stage 6 step 8');
    this.steps.push('stage 6 step 9');
    this.steps.push('stage 6 step 10');
    this.steps.push('stage 6 step 11');
    this.steps.push('stage 6 step 12');
    this.steps.push('stage 6 step 13');
    this.steps.push('stage 6 step 14');
    this.steps.push('stage 6 step 15');
    this.steps.push('stage 6 step 16');
    this.steps.push('stage 6 step 17');
  }
  stage7() {
    this.steps.push('stage 7 step 0');
    this.steps.push('stage 7 step 1');
    this.steps.push('stage 7 step 2');
    this.steps.push('stage 7 step 3');
    this.steps.push('stage 7 step 4');
    this.steps.push('stage 7 step 5');
    this.steps.push('stage 7 step 6');
    this.steps.push('stage 7 step 7');
    this.steps.push('stage 7 step 8');
    this.steps.push('stage 7 step 9');
    this.steps.push('stage 7 step 10');
    this.steps.push('stage 7 step 11');
    this.steps.push('stage 7 step 12');
    this.steps.push('stage 7 step 13');
    this.steps.push('stage 7 step 14');
    this.steps.push('stage 7 step 15');
    this.steps.push('stage 7 step 16');
    this.steps.push('stage 7 step 17');
  }
  stage8() {
    this.steps.push('stage 8 step 0');
    this.steps.push('stage 8 step 1');
    this.steps.push('stage 8 step 2');
    this.steps.push('stage 8 step 3');
    this.steps.push('stage 8 step 4');
    this.steps.push('stage 8 step 5');
    this.steps.push('stage 8 step 6');
    this.steps.push('stage 8 step 7');
    this.steps.push('stage 8 step 8');
    this.steps.push('stage 8 step 9');
    this.steps.push('stage 8 step 10');
    this.steps.push('stage 8 step 11');
    this.steps.push('stage 8 step 12');
    this.steps.push('stage 8 step 13');
    this.steps.push('stage 8 step 14');
    this.steps.push('stage 8 step 15');
    this.steps.push('stage 8 step 16');
    this.steps.push('stage 8 step 17');
  }
  stage9() {
    this.steps.push('stage 9 step 0');
    this.steps.push('stage 9 step 1');
    this.steps.push('stage 9 step 2');
    this.steps.push('stage 9 step 3');
    this.steps.push('stage 9 step 4');
    this.steps.push('stage 9 step 5');
    this.steps.push('stage 9 step 6');
    this.steps.push('stage 9 step 7');
    this.steps.push('stage 9 step 8');
    this.steps.push('stage 9 step 9');
    this.steps.push('stage 9 step 10');
    this.steps.push('stage 9 step 11');
    this.steps.push('stage 9 step 12');
    this.steps.push('stage 9 step 13');
    this.steps.push('stage 9 step 14');
    this.steps.push('stage 9 step 15');
    this.steps.push('stage 9 step 16');
    this.steps.push('stage 9 step 17');
  }
  stage10() {
    this.steps.push('stage 10 step 0');
    this.steps.push('stage 10 step 1');
    this.steps.push('stage 10 step 2');
    this.steps.push('stage 10 step 3');
    this.steps.push('stage 10 step 4');
    this.steps.push('stage 10 step 5');
    this.steps.push('stage 10 step 6');
    this.steps.push('stage 10 step 7');
    this.steps.push('stage 10 step 8');
    this.steps.push('stage 10 step 9');
    this.steps.push('stage 10 step 10');
    this.steps.push('stage 10 step 11');
    this.steps.push('stage 10 step 12');
    this.steps.push('stage 10 step 13');
    this.steps.push('stage 10 step 14');
  }
}
