export function decode(payload: any, fallback: string): string {
  if (!payload) {
    return fallback;
  }
  return String(payload);
}

function helper(x: number): number {
  return x * 2;
}
