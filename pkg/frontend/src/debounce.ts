/** Single pending action; scheduling again cancels the previous one. */
export class Debouncer {
  private timer: ReturnType<typeof setTimeout> | null = null;

  schedule(fn: () => void, ms: number): void {
    this.cancel();
    this.timer = setTimeout(() => {
      this.timer = null;
      fn();
    }, ms);
  }

  cancel(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
  }

  get pending(): boolean {
    return this.timer !== null;
  }
}
