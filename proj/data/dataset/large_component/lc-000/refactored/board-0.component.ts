import { Component } from '@angular/core';

@Component({
  selector: 'app-board-0',
  template: '<p>{{ title }}</p>'
})
export class Board0Component {
  constructor(private pipeline: Board0PipelineService) {}

  run(): void {
    this.pipeline.runAll();
  }
}
