// DOM wiring for the review page. All state lives in ReviewQueue; this file
// renders it and forwards user input to the HTTP API.

import { audioUrl, fetchItems, postDecision, type DecisionAction } from './api.js';
import { tokenDiff } from './diff.js';
import { commandFor, SHORTCUT_HELP, type Command } from './keyboard.js';
import { ReviewQueue } from './queue.js';

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function renderDiff(gt: string, pred: string): void {
  const gtRow = el<HTMLElement>('gt-tokens');
  const predRow = el<HTMLElement>('pred-tokens');
  gtRow.textContent = '';
  predRow.textContent = '';
  for (const entry of tokenDiff(gt, pred)) {
    if (entry.gt !== undefined) {
      const span = document.createElement('span');
      span.textContent = entry.gt;
      span.className = entry.op === 'equal' ? 'tok' : `tok tok-${entry.op}`;
      gtRow.appendChild(span);
    }
    if (entry.pred !== undefined) {
      const span = document.createElement('span');
      span.textContent = entry.pred;
      span.className = entry.op === 'equal' ? 'tok' : `tok tok-${entry.op}`;
      predRow.appendChild(span);
    }
  }
}

class App {
  private queue = new ReviewQueue([]);
  private player = el<HTMLAudioElement>('player');
  private editor = el<HTMLTextAreaElement>('editor');
  private editorWrap = el<HTMLElement>('editor-wrap');
  private status = el<HTMLElement>('status');

  async start(): Promise<void> {
    const help = el<HTMLElement>('help');
    for (const [keys, what] of SHORTCUT_HELP) {
      const row = document.createElement('div');
      row.innerHTML = `<kbd></kbd> <span></span>`;
      (row.children[0] as HTMLElement).textContent = keys;
      (row.children[1] as HTMLElement).textContent = what;
      help.appendChild(row);
    }
    try {
      this.queue = new ReviewQueue(await fetchItems());
    } catch (err) {
      this.status.textContent = `failed to load items: ${err}`;
      return;
    }
    document.addEventListener('keydown', (ev) => this.onKey(ev));
    el<HTMLButtonElement>('btn-gt').addEventListener('click', () => this.run('accept_gt'));
    el<HTMLButtonElement>('btn-pred').addEventListener('click', () => this.run('accept_pred'));
    el<HTMLButtonElement>('btn-edit').addEventListener('click', () => this.run('edit'));
    el<HTMLButtonElement>('btn-reject').addEventListener('click', () => this.run('reject'));
    el<HTMLButtonElement>('editor-save').addEventListener('click', () => void this.saveEdit());
    el<HTMLButtonElement>('editor-cancel').addEventListener('click', () => this.closeEditor());
    this.render();
  }

  private onKey(ev: KeyboardEvent): void {
    const editing = document.activeElement === this.editor;
    if (editing && ev.key === 'Escape') {
      this.closeEditor();
      return;
    }
    const cmd = commandFor({ key: ev.key, editing });
    if (cmd) {
      ev.preventDefault();
      this.run(cmd);
    }
  }

  private run(cmd: Command): void {
    const item = this.queue.current;
    if (!item) return;
    switch (cmd) {
      case 'next':
        this.queue.next();
        this.render();
        break;
      case 'prev':
        this.queue.prev();
        this.render();
        break;
      case 'replay':
        this.player.currentTime = 0;
        void this.player.play().catch(() => undefined);
        break;
      case 'edit':
        this.editorWrap.hidden = false;
        this.editor.value = item.gt_text;
        this.editor.focus();
        break;
      default:
        void this.submit(cmd);
    }
  }

  private async saveEdit(): Promise<void> {
    const text = this.editor.value.trim();
    if (!text) return;
    this.closeEditor();
    await this.submit('custom', text);
  }

  private closeEditor(): void {
    this.editorWrap.hidden = true;
    this.editor.blur();
  }

  private async submit(action: DecisionAction, customText?: string): Promise<void> {
    const item = this.queue.current;
    if (!item) return;
    try {
      await postDecision({
        id: item.id,
        action,
        ...(customText !== undefined ? { custom_text: customText } : {}),
      });
    } catch (err) {
      this.status.textContent = `decision not saved: ${err}`;
      return;
    }
    this.queue.decide(action, customText);
    this.render();
  }

  private render(): void {
    const item = this.queue.current;
    const card = el<HTMLElement>('card');
    if (!item) {
      card.hidden = true;
      this.status.textContent = 'verify queue is empty';
      return;
    }
    card.hidden = false;
    el<HTMLElement>('item-id').textContent = item.id;
    el<HTMLElement>('item-wer').textContent = `wer ${item.wer.toFixed(3)}`;
    el<HTMLElement>('item-dur').textContent = `${item.duration_s.toFixed(2)} s`;
    renderDiff(item.gt_text, item.pred_text);
    const decided = this.queue.decisionFor(item.id);
    el<HTMLElement>('item-decided').textContent = decided ? `decided: ${decided.action}` : '';
    this.player.src = audioUrl(item.id);
    this.status.textContent = this.queue.done
      ? `all ${this.queue.length} items decided — run "fasa review merge" to apply`
      : `item ${this.queue.index + 1} of ${this.queue.length}, ${this.queue.decidedCount} decided`;
  }
}

void new App().start();
