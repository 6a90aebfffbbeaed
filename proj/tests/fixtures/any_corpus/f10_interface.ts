export interface Envelope {
  body: any;
  headers: Record<string, string>;
  trace: any[];
}
