import { Component } from '@angular/core';

@Component({
  selector: 'app-cart',
  templateUrl: './app-cart.component.html'
})
export class CartComponent {
  items = [{ price: 10 }, { price: 15 }];

  calculateTotal(): number {
    return this.items.reduce((sum, item) => sum + item.price, 0);
  }
}
