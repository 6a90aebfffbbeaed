import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-part-1-0', template: '<p>part 0</p>' })
export class Part1x0Component { label = 'part 0'; }

@Injectable({ providedIn: 'root' })
export class Part1x1Service {
  tag(): string { return 'part 1'; }
}

@Component({ selector: 'app-part-1-2', template: '<p>part 2</p>' })
export class Part1x2Component { label = 'part 2'; }

@Injectable({ providedIn: 'root' })
export class Part1x3Service {
  tag(): string { return 'part 3'; }
}
