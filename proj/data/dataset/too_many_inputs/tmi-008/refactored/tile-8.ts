import { Component, Input } from '@angular/core';

export interface Tile8Options {
  slot0: string;
  slot1: string;
  slot2: string;
  slot3: string;
  slot4: string;
  slot5: string;
}

@Component({ selector: 'app-tile-8', template: '<div>{{ options.slot0 }}</div>' })
export class Tile8Component {
  @Input() options!: Tile8Options;
}
