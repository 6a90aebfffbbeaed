export class Buffers {
  slots: Array<any> = [];

  drain() {
    const backlog: Array<any> = this.slots;
    return backlog;
  }
}
