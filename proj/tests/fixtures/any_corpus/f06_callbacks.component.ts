import { Component } from '@angular/core';

@Component({ selector: 'app-feed', template: '<ul></ul>' })
export class FeedComponent {
  load(service: FeedService): void {
    service.fetch().subscribe((item: any) => {
      console.log(item);
    });
    service.poll((batch: any[], cursor: string) => cursor);
  }
}
