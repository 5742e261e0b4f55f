// Thin client for the review service HTTP API.

export interface ReviewItem {
  id: string;
  gt_text: string;
  pred_text: string;
  wer: number;
  duration_s: number;
}

export type DecisionAction = 'accept_gt' | 'accept_pred' | 'custom' | 'reject';

export interface DecisionBody {
  id: string;
  action: DecisionAction;
  custom_text?: string;
  reviewer?: string;
}

export async function fetchItems(base = ''): Promise<ReviewItem[]> {
  const res = await fetch(`${base}/api/items`);
  if (!res.ok) throw new Error(`GET /api/items failed: ${res.status}`);
  return (await res.json()) as ReviewItem[];
}

export async function postDecision(body: DecisionBody, base = ''): Promise<void> {
  const res = await fetch(`${base}/api/decision`, {
    method: 'POST',
    headers: { 'Content-Type': 'application/json' },
    body: JSON.stringify(body),
  });
  if (!res.ok) {
    const detail = await res.text().catch(() => '');
    throw new Error(`POST /api/decision failed: ${res.status} ${detail}`);
  }
}

export function audioUrl(id: string, base = ''): string {
  return `${base}/api/audio/${encodeURIComponent(id)}`;
}
