import { Component } from '@angular/core';

@Component({
  selector: 'app-board-1',
  template: '<p>{{ title }}</p>'
})
export class Board1Component {
  constructor(private pipeline: Board1PipelineService) {}

  run(): void {
    this.pipeline.runAll();
  }
}
