export function accumulate(items: number[]) {
  let total: any = 0;
  const scratch: any = {};
  for (const item of items) {
    total = total + item;
  }
  return total;
}
