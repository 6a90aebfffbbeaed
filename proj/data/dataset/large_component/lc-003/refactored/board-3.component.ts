import { Component } from '@angular/core';

@Component({
  selector: 'app-board-3',
  template: '<p>{{ title }}</p>'
})
export class Board3Component {
  constructor(private pipeline: Board3PipelineService) {}

  run(): void {
    this.pipeline.runAll();
  }
}
