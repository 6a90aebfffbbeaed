export class Loose {
  value: any | undefined;
  name: string | null = null;
}
