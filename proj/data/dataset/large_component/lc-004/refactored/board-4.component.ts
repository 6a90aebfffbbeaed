import { Component } from '@angular/core';

@Component({
  selector: 'app-board-4',
  template: '<p>{{ title }}</p>'
})
export class Board4Component {
  constructor(private pipeline: Board4PipelineService) {}

  run(): void {
    this.pipeline.runAll();
  }
}
