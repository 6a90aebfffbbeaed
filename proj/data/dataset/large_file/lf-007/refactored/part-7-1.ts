import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class Part7x1Service {
  tag(): string { return 'part 1'; }
}
