import { Component, Input } from '@angular/core';

export interface Tile7Options {
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

@Component({ selector: 'app-tile-7', template: '<div>{{ options.slot0 }}</div>' })
export class Tile7Component {
  @Input() options!: Tile7Options;
}
