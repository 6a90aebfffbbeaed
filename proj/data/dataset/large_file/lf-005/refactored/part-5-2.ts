import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-part-5-2', template: '<p>part 2</p>' })
export class Part5x2Component { label = 'part 2'; }
