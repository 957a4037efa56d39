// Wires the DOM to the api client and the pure state/render modules.

import { ApiClient, ApiError, FixtureInfo, SessionDoc } from "./api.js";
import { forceLayout, Layout } from "./layout.js";
import { renderGraph, renderHistory } from "./render.js";
import {
    ViewState, applyHint, applyRejection, applySession, emptyState,
    overlayText, rejectionText, togglePending,
} from "./state.js";

const WIDTH = 640;
const HEIGHT = 480;

export class App {
    state: ViewState = emptyState();
    private layout: Layout = new Map();
    private fixtures: FixtureInfo[] = [];
    private busy = false;

    constructor(
        private api: ApiClient,
        private root: Document = document,
    ) {}

    private el<T extends HTMLElement>(id: string): T {
        const node = this.root.getElementById(id);
        if (!node) {
            throw new Error(`missing element #${id}`);
        }
        return node as T;
    }

    async start() {
        const { fixtures } = await this.api.listFixtures();
        this.fixtures = fixtures;
        const select = this.el<HTMLSelectElement>("fixture-select");
        select.innerHTML = fixtures
            .map((f) => `<option value="${f.name}">${f.name}</option>`)
            .join("");
        this.el("new-game").addEventListener("click", () => void this.newGame());
        this.el("submit-move").addEventListener("click", () => void this.submitMove());
        this.el("hint").addEventListener("click", () => void this.showHint());
        this.el("graph").addEventListener("click", (ev) => this.onGraphClick(ev));
        this.draw();
    }

    private createRequest() {
        const name = this.el<HTMLSelectElement>("fixture-select").value;
        const pasted = this.el<HTMLTextAreaElement>("framework-text").value.trim();
        const kind = this.el<HTMLSelectElement>("kind-select").value as "ten" | "strong";
        const role = this.el<HTMLSelectElement>("role-select").value as "pro" | "opp";
        const initial = this.el<HTMLInputElement>("initial-input").value
            .split(",").map((s) => s.trim()).filter(Boolean);
        const framework = pasted
            ? { format: (pasted.startsWith("p af") ? "iccma" : "apx") as "iccma" | "apx", text: pasted }
            : { format: "fixture" as const, name };
        return { framework, kind, initial, human_role: role };
    }

    async newGame() {
        await this.guard(async () => {
            const req = this.createRequest();
            const doc = await this.api.createSession(req);
            this.state = applySession(this.state, doc);
            if (req.framework.format === "fixture") {
                const fx = this.fixtures.find((f) => f.name === req.framework.name);
                this.state.designated = fx ? [fx.designated] : [];
            } else {
                this.state.designated = req.initial;
            }
            this.layout = forceLayout(this.state.nodes, this.state.edges, WIDTH, HEIGHT);
        });
    }

    async submitMove() {
        if (!this.state.sessionId || this.state.pendingAdd.length === 0) {
            return;
        }
        await this.guard(async () => {
            const doc = await this.api.postMove(this.state.sessionId!, this.state.pendingAdd);
            const designated = this.state.designated;
            this.state = applySession(this.state, doc);
            this.state.designated = designated;
            this.animateReply(doc);
        });
    }

    async showHint() {
        if (!this.state.sessionId) {
            return;
        }
        await this.guard(async () => {
            const hint = await this.api.getHint(this.state.sessionId!);
            this.state = applyHint(this.state, hint);
        });
    }

    private onGraphClick(ev: Event) {
        const target = ev.target as Element | null;
        const group = target?.closest?.("[data-label]");
        const label = group?.getAttribute("data-label");
        if (label) {
            this.state = togglePending(this.state, label);
            this.draw();
        }
    }

    private animateReply(doc: SessionDoc) {
        const last = doc.history[doc.history.length - 1];
        if (last && last.player !== doc.human_role) {
            const graph = this.el("graph");
            graph.classList.remove("engine-reply");
            void graph.getBoundingClientRect().width;
            graph.classList.add("engine-reply");
        }
    }

    private async guard(action: () => Promise<void>) {
        if (this.busy) {
            return;
        }
        this.busy = true;
        try {
            await action();
        } catch (err) {
            if (err instanceof ApiError) {
                this.state = applyRejection(this.state, err.body);
            } else {
                this.state = applyRejection(this.state, {
                    code: "network", reason: String(err),
                });
            }
        } finally {
            this.busy = false;
            this.draw();
        }
    }

    draw() {
        this.el("graph").innerHTML = renderGraph(this.state, this.layout);
        this.el("history").innerHTML = renderHistory(this.state);
        this.el("pro-commit").textContent = `{${this.state.proCommit.join(", ")}}`;
        this.el("opp-commit").textContent = `{${this.state.oppCommit.join(", ")}}`;
        this.el("pending").textContent = `{${this.state.pendingAdd.join(", ")}}`;
        this.el("turn").textContent =
            this.state.status === "IN_PROGRESS" ? `to move: ${this.state.turn}` : "";
        const rejection = rejectionText(this.state);
        const rejectionEl = this.el("rejection");
        rejectionEl.textContent = rejection ?? "";
        rejectionEl.hidden = rejection === null;
        const hintEl = this.el("hint-text");
        hintEl.textContent = this.state.hint
            ? `suggested: {${this.state.hint.suggested.join(", ")}}; ` +
              `winner if optimal: ${this.state.hint.winner_if_optimal}`
            : "";
        const overlay = this.el("overlay");
        const text = overlayText(this.state);
        overlay.hidden = text === null;
        overlay.textContent = text ?? "";
    }
}

export function main() {
    const app = new App(new ApiClient(""));
    void app.start();
    return app;
}
