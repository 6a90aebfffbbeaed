import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-part-11-0', template: '<p>part 0</p>' })
export class Part11x0Component { label = 'part 0'; }
