import { Component } from '@angular/core';

@Component({
  selector: 'app-board-7',
  template: '<p>{{ title }}</p>'
})
export class Board7Component {
  constructor(private pipeline: Board7PipelineService) {}

  run(): void {
    this.pipeline.runAll();
  }
}
