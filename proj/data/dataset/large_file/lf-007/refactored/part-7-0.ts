import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-part-7-0', template: '<p>part 0</p>' })
export class Part7x0Component { label = 'part 0'; }
