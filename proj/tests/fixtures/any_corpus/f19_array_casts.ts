export class Lists {
  coerce(values: unknown) {
    const loose = values as any[];
    return loose;
  }
}
