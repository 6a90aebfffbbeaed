import { Component } from '@angular/core';

@Component({
  selector: 'app-board-11',
  template: '<p>{{ title }}</p>'
})
export class Board11Component {
  constructor(private pipeline: Board11PipelineService) {}

  run(): void {
    this.pipeline.runAll();
  }
}
