import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class Part7x3Service {
  tag(): string { return 'part 3'; }
}
