import { Component, Input } from '@angular/core';

export interface Tile0Options {
  slot0: string;
  slot1: string;
  slot2: string;
  slot3: string;
  slot4: string;
  slot5: string;
}

@Component({ selector: 'app-tile-0', template: '<div>{{ options.slot0 }}</div>' })
export class Tile0Component {
  @Input() options!: Tile0Options;
}
