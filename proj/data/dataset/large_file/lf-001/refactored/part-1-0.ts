import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-part-1-0', template: '<p>part 0</p>' })
export class Part1x0Component { label = 'part 0'; }
