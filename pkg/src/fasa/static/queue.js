// Review queue state: worst-first ordering, cursor movement, and decision
// bookkeeping. Pure logic; the DOM layer observes it.
export function sortWorstFirst(items) {
    // Highest WER first; equal WER keeps a stable id order so reloads agree.
    return [...items].sort((x, y) => y.wer - x.wer || x.id.localeCompare(y.id));
}
export class ReviewQueue {
    constructor(items) {
        this.cursor = 0;
        this.decisions = new Map();
        this.items = sortWorstFirst(items);
    }
    get length() {
        return this.items.length;
    }
    get index() {
        return this.cursor;
    }
    get current() {
        return this.items[this.cursor];
    }
    get decidedCount() {
        return this.decisions.size;
    }
    get done() {
        return this.items.length > 0 && this.decisions.size === this.items.length;
    }
    decisionFor(id) {
        return this.decisions.get(id);
    }
    next() {
        if (this.cursor < this.items.length - 1)
            this.cursor++;
    }
    prev() {
        if (this.cursor > 0)
            this.cursor--;
    }
    // Record a decision for the current item and move to the next undecided
    // item (wrapping), or stay put when everything is decided.
    decide(action, customText) {
        const item = this.current;
        if (!item)
            return undefined;
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
