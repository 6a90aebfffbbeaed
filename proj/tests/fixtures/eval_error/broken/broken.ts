export class Broken {
  run() {
