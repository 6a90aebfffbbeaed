import { Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class Board1PipelineService {
  steps: string[] = [];

  stage0(): void {
    this.steps.push('stage 0');
  }

  stage1(): void {
    this.steps.push('stage 1');
  }

  stage2(): void {
    this.steps.push('stage 2');
  }

  stage3(): void {
    this.steps.push('stage 3');
  }

  stage4(): void {
    this.steps.push('stage 4');
  }

  stage5(): void {
    this.steps.push('stage 5');
  }

  stage6(): void {
    this.steps.push('stage 6');
  }

  stage7(): void {
    this.steps.push('stage 7');
  }

  stage8(): void {
    this.steps.push('stage 8');
  }

  stage9(): void {
    this.steps.push('stage 9');
  }

  stage10(): void {
    this.steps.push('stage 10');
  }

  runAll(): void {
    this.stage0();
    this.stage1();
    this.stage2();
    this.stage3();
    this.stage4();
    this.stage5();
    this.stage6();
    this.stage7();
    this.stage8();
    this.stage9();
    this.stage10();
  }
}
