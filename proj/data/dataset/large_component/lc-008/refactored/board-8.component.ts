import { Component } from '@angular/core';

@Component({
  selector: 'app-board-8',
  template: '<p>{{ title }}</p>'
})
export class Board8Component {
  constructor(private pipeline: Board8PipelineService) {}

  run(): void {
    this.pipeline.runAll();
  }
}
