import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-part-1-2', template: '<p>part 2</p>' })
export class Part1x2Component { label = 'part 2'; }
