import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-part-11-2', template: '<p>part 2</p>' })
export class Part11x2Component { label = 'part 2'; }
