import { describe, expect, it } from 'vitest';
import type { ReviewItem } from '../src/api.js';
import { ReviewQueue, sortWorstFirst } from '../src/queue.js';

function item(id: string, wer: number): ReviewItem {
  return { id, gt_text: 'a b', pred_text: 'a c', wer, duration_s: 1.0 };
}

describe('sortWorstFirst', () => {
  it('orders by descending wer', () => {
    const sorted = sortWorstFirst([item('x', 0.1), item('y', 0.25), item('z', 0.15)]);
    expect(sorted.map((i) => i.id)).toEqual(['y', 'z', 'x']);
  });

  it('breaks wer ties by id for stable reloads', () => {
    const sorted = sortWorstFirst([item('b', 0.2), item('a', 0.2)]);
    expect(sorted.map((i) => i.id)).toEqual(['a', 'b']);
  });

  it('does not mutate its input', () => {
    const input = [item('x', 0.1), item('y', 0.3)];
    sortWorstFirst(input);
    expect(input[0].id).toBe('x');
  });
});

describe('ReviewQueue', () => {
  it('starts at the worst item', () => {
    const q = new ReviewQueue([item('x', 0.1), item('y', 0.25)]);
    expect(q.current?.id).toBe('y');
  });

  it('clamps cursor movement at both ends', () => {
    const q = new ReviewQueue([item('x', 0.1), item('y', 0.25)]);
    q.prev();
    expect(q.index).toBe(0);
    q.next();
    q.next();
    expect(q.index).toBe(1);
  });

  it('decide records the action and advances to the next undecided item', () => {
    const q = new ReviewQueue([item('x', 0.3), item('y', 0.2), item('z', 0.1)]);
    const decided = q.decide('accept_gt');
    expect(decided?.id).toBe('x');
    expect(q.decisionFor('x')).toEqual({ action: 'accept_gt', customText: undefined });
    expect(q.current?.id).toBe('y');
  });

  it('skips already-decided items when advancing', () => {
    const q = new ReviewQueue([item('x', 0.3), item('y', 0.2), item('z', 0.1)]);
    q.decide('accept_gt'); // x -> cursor on y
    q.next(); // cursor on z
    q.decide('reject'); // z -> wraps past x to y
    expect(q.current?.id).toBe('y');
    expect(q.done).toBe(false);
    q.decide('custom', 'fixed text');
    expect(q.done).toBe(true);
    expect(q.decisionFor('y')).toEqual({ action: 'custom', customText: 'fixed text' });
  });

  it('re-deciding an item overwrites, not duplicates', () => {
    const q = new ReviewQueue([item('x', 0.3), item('y', 0.2)]);
    q.decide('reject');
    q.prev();
    q.decide('accept_pred');
    expect(q.decidedCount).toBe(1);
    expect(q.decisionFor('x')?.action).toBe('accept_pred');
  });

  it('empty queue is never done and decide is a no-op', () => {
    const q = new ReviewQueue([]);
    expect(q.done).toBe(false);
    expect(q.decide('reject')).toBeUndefined();
  });
});
