// Token-level diff between the transcript window (ground truth) and the
// recognizer output, used to highlight disagreements in the review pane.

export type DiffOp = 'equal' | 'sub' | 'del' | 'ins';

export interface DiffEntry {
  op: DiffOp;
  // gt is present for equal/sub/del, pred for equal/sub/ins
  gt?: string;
  pred?: string;
}

export function tokenize(text: string): string[] {
  return text.split(/\s+/).filter((t) => t.length > 0);
}

// Standard Levenshtein DP over tokens, then a backtrace into an edit script.
// Ties prefer substitution, then deletion, so runs of equal tokens stay
// contiguous and the script is deterministic.
export function tokenDiff(gtText: string, predText: string): DiffEntry[] {
  const a = tokenize(gtText);
  const b = tokenize(predText);
  const n = a.length;
  const m = b.length;
  const dist: number[][] = [];
  for (let i = 0; i <= n; i++) {
    dist.push(new Array<number>(m + 1).fill(0));
    dist[i][0] = i;
  }
  for (let j = 0; j <= m; j++) dist[0][j] = j;
  for (let i = 1; i <= n; i++) {
    for (let j = 1; j <= m; j++) {
      const subCost = dist[i - 1][j - 1] + (a[i - 1] === b[j - 1] ? 0 : 1);
      dist[i][j] = Math.min(subCost, dist[i - 1][j] + 1, dist[i][j - 1] + 1);
    }
  }
  const script: DiffEntry[] = [];
  let i = n;
  let j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && dist[i][j] === dist[i - 1][j - 1] + (a[i - 1] === b[j - 1] ? 0 : 1)) {
      script.push(
        a[i - 1] === b[j - 1]
          ? { op: 'equal', gt: a[i - 1], pred: b[j - 1] }
          : { op: 'sub', gt: a[i - 1], pred: b[j - 1] },
      );
      i--;
      j--;
    } else if (i > 0 && dist[i][j] === dist[i - 1][j] + 1) {
      script.push({ op: 'del', gt: a[i - 1] });
      i--;
    } else {
      script.push({ op: 'ins', pred: b[j - 1] });
      j--;
    }
  }
  script.reverse();
  return script;
}

export function diffDistance(script: DiffEntry[]): number {
  return script.filter((e) => e.op !== 'equal').length;
}
