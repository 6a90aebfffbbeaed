import { Component, Input } from '@angular/core';

export interface Tile1Options {
  slot0: string;
  slot1: string;
  slot2: string;
  slot3: string;
  slot4: string;
  slot5: string;
  slot6: string;
}

@Component({ selector: 'app-tile-1', template: '<div>{{ options.slot0 }}</div>' })
export class Tile1Component {
  @Input() options!: Tile1Options;
}
