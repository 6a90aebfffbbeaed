import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-part-9-0', template: '<p>part 0</p>' })
export class Part9x0Component { label = 'part 0'; }

@Injectable({ providedIn: 'root' })
export class Part9x1Service {
  tag(): string { return 'part 1'; }
}

@Component({ selector: 'app-part-9-2', template: '<p>part 2</p>' })
export class Part9x2Component { label = 'part 2'; }

@Injectable({ providedIn: 'root' })
export class Part9x3Service {
  tag(): string { return 'part 3'; }
}
