// SVG rendering of the attack graph and commitments. Builds markup as a
// string so it stays testable without a DOM.

import type { Layout } from "./layout.js";
import type { ViewState } from "./state.js";
import { nodeRole } from "./state.js";

const FILL = {
    pro: "#bcd9f5",
    opp: "#f5c4bc",
    pending: "#f9e9a9",
    none: "#f2f2f2",
};

const NODE_R = 18;

function esc(text: string): string {
    return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function edgePath(x1: number, y1: number, x2: number, y2: number): string {
    // trim both ends so arrowheads sit on the node border
    const d = Math.max(Math.hypot(x2 - x1, y2 - y1), 1e-6);
    const ux = (x2 - x1) / d;
    const uy = (y2 - y1) / d;
    const sx = x1 + ux * NODE_R;
    const sy = y1 + uy * NODE_R;
    const ex = x2 - ux * (NODE_R + 4);
    const ey = y2 - uy * (NODE_R + 4);
    return `M ${sx.toFixed(1)} ${sy.toFixed(1)} L ${ex.toFixed(1)} ${ey.toFixed(1)}`;
}

function selfLoop(x: number, y: number): string {
    const r = NODE_R;
    return `M ${(x + r).toFixed(1)} ${y.toFixed(1)} ` +
        `C ${(x + 2.6 * r).toFixed(1)} ${(y - 1.8 * r).toFixed(1)} ` +
        `${(x - 1.0 * r).toFixed(1)} ${(y - 2.8 * r).toFixed(1)} ` +
        `${(x - 0.2 * r).toFixed(1)} ${(y - r).toFixed(1)}`;
}

export function renderGraph(state: ViewState, layout: Layout): string {
    const parts: string[] = [];
    parts.push(
        '<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" ' +
        'markerWidth="7" markerHeight="7" orient="auto-start-reverse">' +
        '<path d="M 0 0 L 10 5 L 0 10 z" fill="#555"/></marker></defs>',
    );
    for (const edge of state.edges) {
        const a = layout.get(edge.from);
        const b = layout.get(edge.to);
        if (!a || !b) {
            continue;
        }
        const path = edge.from === edge.to
            ? selfLoop(a.x, a.y)
            : edgePath(a.x, a.y, b.x, b.y);
        const markers = edge.mutual
            ? 'marker-end="url(#arrow)" marker-start="url(#arrow)"'
            : 'marker-end="url(#arrow)"';
        parts.push(
            `<path class="edge" d="${path}" fill="none" stroke="#555" ` +
            `stroke-width="1.5" ${markers}/>`,
        );
    }
    for (const label of state.nodes) {
        const p = layout.get(label);
        if (!p) {
            continue;
        }
        const role = nodeRole(state, label);
        const outlined = state.designated.includes(label);
        const stroke = outlined ? "#1a3d7c" : "#777";
        const strokeWidth = outlined ? 3 : 1.5;
        parts.push(
            `<g class="node" data-label="${esc(label)}">` +
            `<circle cx="${p.x.toFixed(1)}" cy="${p.y.toFixed(1)}" r="${NODE_R}" ` +
            `fill="${FILL[role]}" stroke="${stroke}" stroke-width="${strokeWidth}"/>` +
            `<text x="${p.x.toFixed(1)}" y="${(p.y + 4).toFixed(1)}" ` +
            `text-anchor="middle" font-size="13">${esc(label)}</text></g>`,
        );
    }
    return parts.join("\n");
}

export function renderHistory(state: ViewState): string {
    return state.history
        .map((h, i) => `<li>${i}. ${h.player}: {${h.position.map(esc).join(", ")}}</li>`)
        .join("\n");
}
