import { Component } from '@angular/core';

@Component({
  selector: 'app-board-5',
  template: '<p>{{ title }}</p>'
})
export class Board5Component {
  constructor(private pipeline: Board5PipelineService) {}

  run(): void {
    this.pipeline.runAll();
  }
}
