import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-part-9-0', template: '<p>part 0</p>' })
export class Part9x0Component { label = 'part 0'; }
