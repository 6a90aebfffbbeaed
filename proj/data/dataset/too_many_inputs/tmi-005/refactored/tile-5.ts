import { Component, Input } from '@angular/core';

export interface Tile5Options {
  slot0: string;
  slot1: string;
  slot2: string;
  slot3: string;
  slot4: string;
  slot5: string;
  slot6: string;
}

@Component({ selector: 'app-tile-5', template: '<div>{{ options.slot0 }}</div>' })
export class Tile5Component {
  @Input() options!: Tile5Options;
}
