export class Hooks {
  onEvent: (payload: any) => void = () => {};
  onDone: () => number = () => 0;
}
