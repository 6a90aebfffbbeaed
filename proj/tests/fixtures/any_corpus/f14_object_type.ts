export class Box {
  contents: { value: any; label: string } = { value: null, label: '' };
}
