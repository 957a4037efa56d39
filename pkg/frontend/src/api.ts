// Typed client for the dispute service. All payloads use argument labels.

export type Side = "pro" | "opp";
export type Status = "IN_PROGRESS" | "PRO_WON" | "OPP_WON";

export interface FixtureInfo {
    name: string;
    designated: string;
    arguments: string[];
    attacks: [string, string][];
    dot: string;
}

export interface SessionDoc {
    id: string;
    status: Status;
    human_role: Side;
    turn: Side;
    move_index: number;
    kind: { variant: string; move_bound: number | null };
    pro_commit: string[];
    opp_commit: string[];
    history: { player: Side; position: string[] }[];
    framework: { arguments: string[]; attacks: [string, string][] };
}

export interface HintDoc {
    suggested: string[];
    winner_if_optimal: Side;
}

export interface ApiFailure {
    code: string;
    reason: string;
    condition?: number;
}

export class ApiError extends Error {
    constructor(public status: number, public body: ApiFailure) {
        super(body.reason);
    }
}

export interface CreateRequest {
    framework: { format: "fixture" | "iccma" | "apx"; name?: string; text?: string };
    kind: "ten" | "strong";
    initial: string[];
    human_role: Side;
    bound?: number;
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
    constructor(
        private baseUrl: string = "",
        private fetchImpl: FetchLike = (input, init) => fetch(input, init),
    ) {}

    private async request<T>(path: string, init?: RequestInit): Promise<T> {
        const res = await this.fetchImpl(this.baseUrl + path, init);
        const body = await res.json();
        if (!res.ok) {
            throw new ApiError(res.status, body as ApiFailure);
        }
        return body as T;
    }

    listFixtures(): Promise<{ fixtures: FixtureInfo[] }> {
        return this.request("/v1/fixtures");
    }

    createSession(req: CreateRequest): Promise<SessionDoc> {
        return this.request("/v1/sessions", {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify(req),
        });
    }

    getSession(id: string): Promise<SessionDoc> {
        return this.request(`/v1/sessions/${id}`);
    }

    postMove(id: string, add: string[]): Promise<SessionDoc> {
        return this.request(`/v1/sessions/${id}/moves`, {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify({ add }),
        });
    }

    getHint(id: string): Promise<HintDoc> {
        return this.request(`/v1/sessions/${id}/hint`);
    }
}
