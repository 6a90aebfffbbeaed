import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class Part3x3Service {
  tag(): string { return 'part 3'; }
}
