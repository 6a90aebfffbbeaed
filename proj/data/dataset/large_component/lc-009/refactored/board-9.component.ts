import { Component } from '@angular/core';

@Component({
  selector: 'app-board-9',
  template: '<p>{{ title }}</p>'
})
export class Board9Component {
  constructor(private pipeline: Board9PipelineService) {}

  run(): void {
    this.pipeline.runAll();
  }
}
