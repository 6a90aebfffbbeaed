import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-part-3-0', template: '<p>part 0</p>' })
export class Part3x0Component { label = 'part 0'; }

@Injectable({ providedIn: 'root' })
export class Part3x1Service {
  tag(): string { return 'part 1'; }
}

@Component({ selector: 'app-part-3-2', template: '<p>part 2</p>' })
export class Part3x2Component { label = 'part 2'; }

@Injectable({ providedIn: 'root' })
export class Part3x3Service {
  tag(): string { return 'part 3'; }
}
