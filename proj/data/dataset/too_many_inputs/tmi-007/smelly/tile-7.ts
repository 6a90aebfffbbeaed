import { Component, Input } from '@angular/core';

@Component({ selector: 'app-tile-7', template: '<div>{{ slot0 }}</div>' })
export class Tile7Component {
  @Input() slot0!: string;
  @Input() slot1!: string;
  @Input() slot2!: string;
  @Input() slot3!: string;
  @Input() slot4!: string;
  @Input() slot5!: string;
  @Input() slot6!: string;
  @Input() slot7!: string;
  @Input() slot8!: string;
}
