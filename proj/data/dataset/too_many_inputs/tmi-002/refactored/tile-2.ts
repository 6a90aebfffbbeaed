import { Component, Input } from '@angular/core';

export interface Tile2Options {
  slot0: string;
  slot1: string;
  slot2: string;
  slot3: string;
  slot4: string;
  slot5: string;
  slot6: string;
  slot7: string;
}

@Component({ selector: 'app-tile-2', template: '<div>{{ options.slot0 }}</div>' })
export class Tile2Component {
  @Input() options!: Tile2Options;
}
