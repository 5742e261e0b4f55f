// Keyboard shortcut mapping. Pure so the bindings are testable without a DOM.

export type Command =
  | 'accept_gt'
  | 'accept_pred'
  | 'edit'
  | 'reject'
  | 'replay'
  | 'next'
  | 'prev';

export interface KeyStroke {
  key: string;
  // true when focus is inside a text input; most shortcuts are suppressed
  editing: boolean;
}

const BINDINGS: Record<string, Command> = {
  '1': 'accept_gt',
  '2': 'accept_pred',
  e: 'edit',
  r: 'reject',
  ' ': 'replay',
  ArrowDown: 'next',
  ArrowUp: 'prev',
  j: 'next',
  k: 'prev',
};

export function commandFor(stroke: KeyStroke): Command | null {
  if (stroke.editing) return null;
  return BINDINGS[stroke.key] ?? null;
}

export const SHORTCUT_HELP: ReadonlyArray<[string, string]> = [
  ['1', 'accept transcript text'],
  ['2', 'accept recognizer text'],
  ['e', 'edit text'],
  ['r', 'reject clip'],
  ['space', 'replay audio'],
  ['j / ↓', 'next item'],
  ['k / ↑', 'previous item'],
];
