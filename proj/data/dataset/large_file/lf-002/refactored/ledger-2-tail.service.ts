import { Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class Ledger2TailService {
  entries: string[] = [];

  entry70(): void {
    this.entries.push('entry 70');
  }
  entry71(): void {
    this.entries.push('entry 71');
  }
  entry72(): void {
    this.entries.push('entry 72');
  }
  entry73(): void {
    this.entries.push('entry 73');
  }
  entry74(): void {
    this.entries.push('entry 74');
  }
  entry75(): void {
    this.entries.push('entry 75');
  }
  entry76(): void {
    this.entries.push('entry 76');
  }
  entry77(): void {
    this.entries.push('entry 77');
  }
  entry78(): void {
    this.entries.push('entry 78');
  }
  entry79(): void {
    this.entries.push('entry 79');
  }
  entry80(): void {
    this.entries.push('entry 80');
  }
  entry81(): void {
    this.entries.push('entry 81');
  }
  entry82(): void {
    this.entries.push('entry 82');
  }
  entry83(): void {
    this.entries.push('entry 83');
  }
  entry84(): void {
    this.entries.push('entry 84');
  }
  entry85(): void {
    this.entries.push('entry 85');
  }
  entry86(): void {
    this.entries.push('entry 86');
  }
  entry87(): void {
    this.entries.push('entry 87');
  }
  entry88(): void {
    this.entries.push('entry 88');
  }
  entry89(): void {
    this.entries.push('entry 89');
  }
  entry90(): void {
    this.entries.push('entry 90');
  }
  entry91(): void {
    this.entries.push('entry 91');
  }
  entry92(): void {
    this.entries.push('entry 92');
  }
  entry93(): void {
    this.entries.push('entry 93');
  }
  entry94(): void {
    this.entries.push('entry 94');
  }
  entry95(): void {
    this.entries.push('entry 95');
  }
  entry96(): void {
    this.entries.push('entry 96');
  }
  entry97(): void {
    this.entries.push('entry 97');
  }
  entry98(): void {
    this.entries.push('entry 98');
  }
  entry99(): void {
    this.entries.push('entry 99');
  }
  entry100(): void {
    this.entries.push('entry 100');
  }
  entry101(): void {
    this.entries.push('entry 101');
  }
  entry102(): void {
    this.entries.push('entry 102');
  }
  entry103(): void {
    this.entries.push('entry 103');
  }
  entry104(): void {
    this.entries.push('entry 104');
  }
  entry105(): void {
    this.entries.push('entry 105');
  }
  entry106(): void {
    this.entries.push('entry 106');
  }
  entry107(): void {
    this.entries.push('entry 107');
  }
  entry108(): void {
    this.entries.push('entry 108');
  }
  entry109(): void {
    this.entries.push('entry 109');
  }
  entry110(): void {
    this.entries.push('entry 110');
  }
  entry111(): void {
    this.entries.push('entry 111');
  }
  entry112(): void {
    this.entries.push('entry 112');
  }
  entry113(): void {
    this.entries.push('entry 113');
  }
  entry114(): void {
    this.entries.push('entry 114');
  }
  entry115(): void {
    this.entries.push('entry 115');
  }
  entry116(): void {
    this.entries.push('entry 116');
  }
  entry117(): void {
    this.entries.push('entry 117');
  }
  entry118(): void {
    this.entries.push('entry 118');
  }
  entry119(): void {
    this.entries.push('entry 119');
  }
  entry120(): void {
    this.entries.push('entry 120');
  }
  entry121(): void {
    this.entries.push('entry 121');
  }
  entry122(): void {
    this.entries.push('entry 122');
  }
  entry123(): void {
    this.entries.push('entry 123');
  }
  entry124(): void {
    this.entries.push('entry 124');
  }
  entry125(): void {
    this.entries.push('entry 125');
  }
  entry126(): void {
    this.entries.push('entry 126');
  }
  entry127(): void {
    this.entries.push('entry 127');
  }
  entry128(): void {
    this.entries.push('entry 128');
  }
  entry129(): void {
    this.entries.push('entry 129');
  }
  entry130(): void {
    this.entries.push('entry 130');
  }
  entry131(): void {
    this.entries.push('entry 131');
  }
  entry132(): void {
    this.entries.push('entry 132');
  }
  entry133(): void {
    this.entries.push('entry 133');
  }
  entry134(): void {
    this.entries.push('entry 134');
  }
  entry135(): void {
    this.entries.push('entry 135');
  }
  entry136(): void {
    this.entries.push('entry 136');
  }
  entry137(): void {
    this.entries.push('entry 137');
  }
  entry138(): void {
    this.entries.push('entry 138');
  }
  entry139(): void {
    this.entries.push('entry 139');
  }
}
