import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-part-3-0', template: '<p>part 0</p>' })
export class Part3x0Component { label = 'part 0'; }
