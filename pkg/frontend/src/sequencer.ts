/** Discards stale responses: only the most recently issued request in a
 * series may apply its result. */
export class RequestSequencer {
  private current = 0;

  next(): number {
    this.current += 1;
    return this.current;
  }

  isCurrent(id: number): boolean {
    return id === this.current;
  }
}
