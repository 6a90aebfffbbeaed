import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-part-3-2', template: '<p>part 2</p>' })
export class Part3x2Component { label = 'part 2'; }
