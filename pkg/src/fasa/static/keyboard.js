// Keyboard shortcut mapping. Pure so the bindings are testable without a DOM.
const BINDINGS = {
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
export function commandFor(stroke) {
    if (stroke.editing)
        return null;
    return BINDINGS[stroke.key] ?? null;
}
export const SHORTCUT_HELP = [
    ['1', 'accept transcript text'],
    ['2', 'accept recognizer text'],
    ['e', 'edit text'],
    ['r', 'reject clip'],
    ['space', 'replay audio'],
    ['j / ↓', 'next item'],
    ['k / ↑', 'previous item'],
];
