import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-part-5-0', template: '<p>part 0</p>' })
export class Part5x0Component { label = 'part 0'; }
