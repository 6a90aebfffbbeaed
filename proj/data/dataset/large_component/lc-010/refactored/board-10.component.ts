import { Component } from '@angular/core';

@Component({
  selector: 'app-board-10',
  template: '<p>{{ title }}</p>'
})
export class Board10Component {
  constructor(private pipeline: Board10PipelineService) {}

  run(): void {
    this.pipeline.runAll();
  }
}
