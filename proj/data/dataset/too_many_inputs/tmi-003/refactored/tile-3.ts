import { Component, Input } from '@angular/core';

export interface Tile3Options {
  slot0: string;
  slot1: string;
  slot2: string;
  slot3: string;
  slot4: string;
  slot5: string;
  slot6: string;
  slot7: string;
  slot8: string;
}

@Component({ selector: 'app-tile-3', template: '<div>{{ options.slot0 }}</div>' })
export class Tile3Component {
  @Input() options!: Tile3Options;
}
