// Thin client for the review service HTTP API.
export async function fetchItems(base = '') {
    const res = await fetch(`${base}/api/items`);
    if (!res.ok)
        throw new Error(`GET /api/items failed: ${res.status}`);
    return (await res.json());
}
export async function postDecision(body, base = '') {
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
export function audioUrl(id, base = '') {
    return `${base}/api/audio/${encodeURIComponent(id)}`;
}
