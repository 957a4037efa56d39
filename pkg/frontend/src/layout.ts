// Small deterministic force-directed layout. Pure so it can be unit tested;
// no DOM or d3 dependency needed for a couple dozen nodes.

import type { GraphEdge } from "./state.js";

export interface Point {
    x: number;
    y: number;
}

export type Layout = Map<string, Point>;

export function circleLayout(nodes: string[], width: number, height: number): Layout {
    const cx = width / 2;
    const cy = height / 2;
    const r = Math.min(width, height) * 0.38;
    const out: Layout = new Map();
    nodes.forEach((label, i) => {
        const angle = (2 * Math.PI * i) / Math.max(nodes.length, 1) - Math.PI / 2;
        out.set(label, { x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
    });
    return out;
}

export function forceLayout(
    nodes: string[],
    edges: GraphEdge[],
    width: number,
    height: number,
    iterations = 150,
): Layout {
    const pos = circleLayout(nodes, width, height);
    if (nodes.length < 2) {
        return pos;
    }
    const k = Math.sqrt((width * height) / nodes.length) * 0.6;
    const links = edges
        .filter((e) => e.from !== e.to)
        .map((e) => [e.from, e.to] as const);
    for (let step = 0; step < iterations; step++) {
        const temp = (0.1 * Math.min(width, height) * (iterations - step)) / iterations;
        const disp: Layout = new Map(nodes.map((n) => [n, { x: 0, y: 0 }]));
        for (let i = 0; i < nodes.length; i++) {
            for (let j = i + 1; j < nodes.length; j++) {
                const a = pos.get(nodes[i])!;
                const b = pos.get(nodes[j])!;
                let dx = a.x - b.x;
                let dy = a.y - b.y;
                let d = Math.hypot(dx, dy);
                if (d < 1e-6) {
                    dx = 0.01 * (i - j);
                    dy = 0.01;
                    d = Math.hypot(dx, dy);
                }
                const f = (k * k) / d / d;
                const da = disp.get(nodes[i])!;
                const db = disp.get(nodes[j])!;
                da.x += dx * f;
                da.y += dy * f;
                db.x -= dx * f;
                db.y -= dy * f;
            }
        }
        for (const [from, to] of links) {
            const a = pos.get(from)!;
            const b = pos.get(to)!;
            const dx = a.x - b.x;
            const dy = a.y - b.y;
            const d = Math.max(Math.hypot(dx, dy), 1e-6);
            const f = (d * d) / k / d;
            const da = disp.get(from)!;
            const db = disp.get(to)!;
            da.x -= dx * f;
            da.y -= dy * f;
            db.x += dx * f;
            db.y += dy * f;
        }
        const margin = 30;
        for (const n of nodes) {
            const p = pos.get(n)!;
            const d = disp.get(n)!;
            const len = Math.max(Math.hypot(d.x, d.y), 1e-6);
            p.x += (d.x / len) * Math.min(len, temp);
            p.y += (d.y / len) * Math.min(len, temp);
            p.x = Math.min(width - margin, Math.max(margin, p.x));
            p.y = Math.min(height - margin, Math.max(margin, p.y));
        }
    }
    return pos;
}
