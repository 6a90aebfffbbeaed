import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class Part1x1Service {
  tag(): string { return 'part 1'; }
}
