import { describe, expect, it } from "vitest";

import type { SessionDoc } from "../src/api.js";
import { forceLayout } from "../src/layout.js";
import { renderGraph, renderHistory } from "../src/render.js";
import { applySession, emptyState, togglePending } from "../src/state.js";

const DOC: SessionDoc = {
    id: "s1",
    status: "IN_PROGRESS",
    human_role: "opp",
    turn: "opp",
    move_index: 1,
    kind: { variant: "ten", move_bound: null },
    pro_commit: ["a"],
    opp_commit: [],
    history: [{ player: "pro", position: ["a"] }],
    framework: {
        arguments: ["a", "b1", "b2"],
        attacks: [["b1", "a"], ["b2", "a"], ["b1", "b2"], ["b2", "b1"]],
    },
};

describe("renderGraph", () => {
    it("draws a clickable node per argument with role colors", () => {
        let state = applySession(emptyState(), DOC);
        state = { ...state, designated: ["a"] };
        state = togglePending(state, "b1");
        const layout = forceLayout(state.nodes, state.edges, 640, 480);
        const svg = renderGraph(state, layout);
        expect(svg.match(/data-label=/g)).toHaveLength(3);
        expect(svg).toContain('data-label="a"');
        expect(svg).toContain('fill="#bcd9f5"'); // pro
        expect(svg).toContain('fill="#f9e9a9"'); // pending
        expect(svg).toContain('fill="#f2f2f2"'); // uncommitted
    });

    it("outlines the designated argument and double-heads mutual attacks", () => {
        let state = applySession(emptyState(), DOC);
        state = { ...state, designated: ["a"] };
        const layout = forceLayout(state.nodes, state.edges, 640, 480);
        const svg = renderGraph(state, layout);
        expect(svg).toContain('stroke-width="3"');
        expect(svg.match(/marker-start/g)).toHaveLength(1);
        expect(svg.match(/<path class="edge"/g)).toHaveLength(3);
    });

    it("escapes markup in labels", () => {
        const doc: SessionDoc = {
            ...DOC,
            pro_commit: [],
            framework: { arguments: ["<x>"], attacks: [] },
        };
        const state = applySession(emptyState(), doc);
        const layout = forceLayout(state.nodes, state.edges, 640, 480);
        const svg = renderGraph(state, layout);
        expect(svg).toContain("&lt;x&gt;");
        expect(svg).not.toContain("<x>");
    });
});

describe("renderHistory", () => {
    it("lists each position in move order", () => {
        const doc: SessionDoc = {
            ...DOC,
            history: [
                { player: "pro", position: ["a"] },
                { player: "opp", position: ["b1"] },
            ],
        };
        const state = applySession(emptyState(), doc);
        const html = renderHistory(state);
        expect(html).toContain("<li>0. pro: {a}</li>");
        expect(html).toContain("<li>1. opp: {b1}</li>");
    });
});
