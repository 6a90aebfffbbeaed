export class Fetcher {
  pending: Promise<string> | null = null;

  run(): Promise<number> {
    return Promise.resolve(1);
  }
}
