import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-part-9-2', template: '<p>part 2</p>' })
export class Part9x2Component { label = 'part 2'; }
