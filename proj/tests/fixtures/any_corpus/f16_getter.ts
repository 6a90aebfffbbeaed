export class LazyBag {
  private stash = {};

  get snapshot(): any {
    return this.stash;
  }
}
