// any in a comment should not count
/* neither should any here */
export class Notes {
  label = 'any';
  hint = "prefer any alternative";
}
