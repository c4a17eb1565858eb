// Thin typed client over the viewscape HTTP API.

import type {
    LandscapeResponse,
    LayoutGeometry,
    MetaResponse,
    SelectionResponse,
    SpecAccepted,
    SpecDoc,
    SpecRejected,
} from "./types";

export class ApiError extends Error {
    constructor(
        readonly status: number,
        readonly body: SpecRejected & Record<string, unknown>,
    ) {
        super(`HTTP ${status}: ${body.error ?? "request failed"}`);
    }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
    constructor(
        readonly baseUrl: string,
        private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
    ) {}

    private async request<T>(path: string, init?: RequestInit): Promise<T> {
        const res = await this.fetchFn(this.baseUrl.replace(/\/$/, "") + path, init);
        const body = await res.json();
        if (!res.ok) {
            throw new ApiError(res.status, body);
        }
        return body as T;
    }

    select(w: number, h: number): Promise<SelectionResponse> {
        return this.request(`/api/select?w=${w}&h=${h}`);
    }

    layout(viewId: string, w: number, h: number): Promise<LayoutGeometry> {
        return this.request(`/api/views/${encodeURIComponent(viewId)}/layout?w=${w}&h=${h}`);
    }

    landscape(step?: number, mode: "fast" | "full" = "fast"): Promise<LandscapeResponse> {
        const stepArg = step === undefined ? "" : `step=${step}&`;
        return this.request(`/api/landscape?${stepArg}mode=${mode}`);
    }

    meta(): Promise<MetaResponse> {
        return this.request("/api/meta");
    }

    postSpec(doc: SpecDoc): Promise<SpecAccepted> {
        return this.request("/api/spec", {
            method: "POST",
            headers: { "content-type": "application/json" },
            body: JSON.stringify(doc),
        });
    }
}
