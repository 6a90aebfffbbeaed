import { Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class CastService {
  normalize(raw: string) {
    const parsed = JSON.parse(raw) as any;
    return parsed as any;
  }
}
