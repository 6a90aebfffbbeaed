export function matches(line: string): boolean {
  const pattern = /[a-z]+[0-9]*/;
  return pattern.test(line);
}
