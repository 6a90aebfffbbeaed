import { Component, Input } from '@angular/core';

export interface Tile9Options {
  slot0: string;
  slot1: string;
  slot2: string;
  slot3: string;
  slot4: string;
  slot5: string;
  slot6: string;
}

@Component({ selector: 'app-tile-9', template: '<div>{{ options.slot0 }}</div>' })
export class Tile9Component {
  @Input() options!: Tile9Options;
}
