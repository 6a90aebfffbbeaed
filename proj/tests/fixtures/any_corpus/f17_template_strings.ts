export class Messages {
  render(name: string): string {
    return `treat ${name} as any string`;
  }

  plain = `no substitutions: any text`;
}
