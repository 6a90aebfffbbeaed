import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-part-7-2', template: '<p>part 2</p>' })
export class Part7x2Component { label = 'part 2'; }
