import { Component } from '@angular/core';

export class BaseView {
  title = 'base';
}

@Component({
  selector: 'app-root',
  template: '<p>{{ title }}</p>'
})
export class AppComponent extends BaseView {
  payload: any;
}
