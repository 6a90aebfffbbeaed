import { Component } from '@angular/core';

@Component({
  selector: 'app-board-6',
  template: '<p>{{ title }}</p>'
})
export class Board6Component {
  constructor(private pipeline: Board6PipelineService) {}

  run(): void {
    this.pipeline.runAll();
  }
}
