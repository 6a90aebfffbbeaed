import { Component, Input } from '@angular/core';

export interface Tile6Options {
  slot0: string;
  slot1: string;
  slot2: string;
  slot3: string;
  slot4: string;
  slot5: string;
  slot6: string;
  slot7: string;
}

@Component({ selector: 'app-tile-6', template: '<div>{{ options.slot0 }}</div>' })
export class Tile6Component {
  @Input() options!: Tile6Options;
}
