import { Component } from '@angular/core';

@Component({
  selector: 'app-board-2',
  template: '<p>{{ title }}</p>'
})
export class Board2Component {
  constructor(private pipeline: Board2PipelineService) {}

  run(): void {
    this.pipeline.runAll();
  }
}
