// View state mirrors the server session after every response; the server is
// the single source of truth. Only pendingAdd and lastRejection are local.

import type { ApiFailure, HintDoc, SessionDoc, Side, Status } from "./api.js";

export interface GraphEdge {
    from: string;
    to: string;
    mutual: boolean;
}

export interface ViewState {
    sessionId: string | null;
    nodes: string[];
    edges: GraphEdge[];
    designated: string[];
    proCommit: string[];
    oppCommit: string[];
    turn: Side;
    humanRole: Side;
    status: Status;
    history: { player: Side; position: string[] }[];
    pendingAdd: string[];
    lastRejection: { condition?: number; reason: string } | null;
    hint: HintDoc | null;
}

export function emptyState(): ViewState {
    return {
        sessionId: null,
        nodes: [],
        edges: [],
        designated: [],
        proCommit: [],
        oppCommit: [],
        turn: "opp",
        humanRole: "opp",
        status: "IN_PROGRESS",
        history: [],
        pendingAdd: [],
        lastRejection: null,
        hint: null,
    };
}

// Collapses each mutual attack pair into one double-headed edge.
export function buildEdges(attacks: [string, string][]): GraphEdge[] {
    const seen = new Set(attacks.map(([f, t]) => `${f}>${t}`));
    const edges: GraphEdge[] = [];
    const done = new Set<string>();
    for (const [from, to] of attacks) {
        const key = `${from}>${to}`;
        if (done.has(key)) {
            continue;
        }
        const mutual = from !== to && seen.has(`${to}>${from}`);
        edges.push({ from, to, mutual });
        done.add(key);
        if (mutual) {
            done.add(`${to}>${from}`);
        }
    }
    return edges;
}

export function applySession(state: ViewState, doc: SessionDoc): ViewState {
    return {
        ...state,
        sessionId: doc.id,
        nodes: doc.framework.arguments,
        edges: buildEdges(doc.framework.attacks),
        proCommit: doc.pro_commit,
        oppCommit: doc.opp_commit,
        turn: doc.turn,
        humanRole: doc.human_role,
        status: doc.status,
        history: doc.history,
        pendingAdd: [],
        lastRejection: null,
        hint: null,
    };
}

export function applyRejection(state: ViewState, failure: ApiFailure): ViewState {
    // a rejected move keeps pendingAdd so the player can fix it in place
    return {
        ...state,
        lastRejection: { condition: failure.condition, reason: failure.reason },
    };
}

export function applyHint(state: ViewState, hint: HintDoc): ViewState {
    return { ...state, hint };
}

export function humanCommit(state: ViewState): string[] {
    return state.humanRole === "pro" ? state.proCommit : state.oppCommit;
}

export function canToggle(state: ViewState, label: string): boolean {
    if (state.status !== "IN_PROGRESS" || state.turn !== state.humanRole) {
        return false;
    }
    // pendingAdd stays disjoint from the mover's own commitment
    return !humanCommit(state).includes(label);
}

export function togglePending(state: ViewState, label: string): ViewState {
    if (!canToggle(state, label)) {
        return state;
    }
    const pendingAdd = state.pendingAdd.includes(label)
        ? state.pendingAdd.filter((x) => x !== label)
        : [...state.pendingAdd, label];
    return { ...state, pendingAdd, lastRejection: null };
}

export type NodeRole = "pro" | "opp" | "pending" | "none";

export function nodeRole(state: ViewState, label: string): NodeRole {
    if (state.proCommit.includes(label)) {
        return "pro";
    }
    if (state.oppCommit.includes(label)) {
        return "opp";
    }
    if (state.pendingAdd.includes(label)) {
        return "pending";
    }
    return "none";
}

export function rejectionText(state: ViewState): string | null {
    if (!state.lastRejection) {
        return null;
    }
    const { condition, reason } = state.lastRejection;
    return condition === undefined
        ? reason
        : `illegal move, condition (${condition}): ${reason}`;
}

// Shown on the game-over overlay. The proverb is the dispute game's motto,
// quoted verbatim.
export const MOTTO = "“the one who has the last word laughs best”";

export function overlayText(state: ViewState): string | null {
    if (state.status === "IN_PROGRESS") {
        return null;
    }
    const winner = state.status === "PRO_WON" ? "pro" : "opp";
    const outcome = winner === state.humanRole ? "You win" : "The engine wins";
    return `${outcome}: ${winner} has the last word. ${MOTTO}`;
}
