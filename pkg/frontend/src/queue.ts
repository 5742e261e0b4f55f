// Review queue state: worst-first ordering, cursor movement, and decision
// bookkeeping. Pure logic; the DOM layer observes it.

import type { DecisionAction, ReviewItem } from './api.js';

export interface Decided {
  action: DecisionAction;
  customText?: string;
}

export function sortWorstFirst(items: ReviewItem[]): ReviewItem[] {
  // Highest WER first; equal WER keeps a stable id order so reloads agree.
  return [...items].sort((x, y) => y.wer - x.wer || x.id.localeCompare(y.id));
}

export class ReviewQueue {
  readonly items: ReviewItem[];
  private cursor = 0;
  private decisions = new Map<string, Decided>();

  constructor(items: ReviewItem[]) {
    this.items = sortWorstFirst(items);
  }

  get length(): number {
    return this.items.length;
  }

  get index(): number {
    return this.cursor;
  }

  get current(): ReviewItem | undefined {
    return this.items[this.cursor];
  }

  get decidedCount(): number {
    return this.decisions.size;
  }

  get done(): boolean {
    return this.items.length > 0 && this.decisions.size === this.items.length;
  }

  decisionFor(id: string): Decided | undefined {
    return this.decisions.get(id);
  }

  next(): void {
    if (this.cursor < this.items.length - 1) this.cursor++;
  }

  prev(): void {
    if (this.cursor > 0) this.cursor--;
  }

  // Record a decision for the current item and move to the next undecided
  // item (wrapping), or stay put when everything is decided.
  decide(action: DecisionAction, customText?: string): ReviewItem | undefined {
    const item = this.current;
    if (!item) return undefined;
    this.decisions.set(item.id, { action, customText });
    for (let step = 1; step <= this.items.length; step++) {
      const k = (this.cursor + step) % this.items.length;
      if (!this.decisions.has(this.items[k].id)) {
        this.cursor = k;
        return item;
      }
    }
    return item;
  }
}
