// Drag-resizable viewport panel. Every resize asks the service which view
// wins at the new size and renders that view's geometry; the panel never
// decides anything locally.

import type { ApiClient } from "./apiClient";
import { renderGeometry } from "./geometry";
import type { SelectionResponse } from "./types";

export const RESIZE_DEBOUNCE_MS = 50;

export interface PanelState {
    width: number;
    height: number;
    selection: SelectionResponse | null;
}

export class ViewportPanel {
    readonly element: HTMLElement;
    private readonly svg: SVGSVGElement;
    private readonly banner: HTMLElement;
    private readonly sizeLabel: HTMLElement;
    private readonly handle: HTMLElement;

    private width: number;
    private height: number;
    private selection: SelectionResponse | null = null;
    private debounceTimer: ReturnType<typeof setTimeout> | null = null;
    private requestSeq = 0;
    private appliedSeq = 0;
    private pending: Promise<void> = Promise.resolve();
    private listeners: ((state: PanelState) => void)[] = [];

    constructor(
        private readonly client: ApiClient,
        root: HTMLElement,
        width = 800,
        height = 500,
    ) {
        this.width = width;
        this.height = height;
        const doc = root.ownerDocument;
        this.element = doc.createElement("div");
        this.element.className = "viewport-panel";

        this.banner = doc.createElement("div");
        this.banner.className = "connection-banner";
        this.banner.textContent = "service unreachable — retrying on next resize";
        this.banner.hidden = true;
        this.element.appendChild(this.banner);

        this.sizeLabel = doc.createElement("div");
        this.sizeLabel.className = "size-label";
        this.element.appendChild(this.sizeLabel);

        this.svg = doc.createElementNS("http://www.w3.org/2000/svg", "svg");
        this.element.appendChild(this.svg);

        this.handle = doc.createElement("div");
        this.handle.className = "resize-handle";
        this.handle.addEventListener("pointerdown", (ev) => this.beginDrag(ev as PointerEvent));
        this.element.appendChild(this.handle);

        root.appendChild(this.element);
    }

    get size(): { width: number; height: number } {
        return { width: this.width, height: this.height };
    }

    /** View id the panel currently shows, per the service's last answer. */
    get currentView(): string | null {
        return this.selection?.view ?? null;
    }

    get offline(): boolean {
        return !this.banner.hidden;
    }

    onChange(listener: (state: PanelState) => void): void {
        this.listeners.push(listener);
    }

    /** Set the viewport size; fetches are debounced like interactive drags. */
    setSize(width: number, height: number): void {
        this.width = Math.max(1, Math.round(width));
        this.height = Math.max(1, Math.round(height));
        this.sizeLabel.textContent = `${this.width} × ${this.height}`;
        this.element.style.width = `${this.width}px`;
        this.element.style.height = `${this.height}px`;
        if (this.debounceTimer !== null) {
            clearTimeout(this.debounceTimer);
        }
        this.debounceTimer = setTimeout(() => {
            this.debounceTimer = null;
            this.pending = this.refresh();
        }, RESIZE_DEBOUNCE_MS);
    }

    /** Resolves once the debounce window closed and the last fetch applied. */
    async settled(): Promise<void> {
        while (this.debounceTimer !== null) {
            await new Promise((resolve) => setTimeout(resolve, RESIZE_DEBOUNCE_MS + 5));
        }
        await this.pending;
    }

    /** Re-query the service at the current size (also used after spec edits). */
    async refresh(): Promise<void> {
        const seq = ++this.requestSeq;
        const { width, height } = this;
        try {
            const selection = await this.client.select(width, height);
            const geometry = await this.client.layout(selection.view, width, height);
            if (seq < this.appliedSeq) {
                return; // a newer resize already landed; drop the stale response
            }
            this.appliedSeq = seq;
            this.selection = selection;
            this.banner.hidden = true;
            this.element.setAttribute("data-view", selection.view);
            this.element.setAttribute("data-fallback", String(selection.fallback));
            renderGeometry(this.svg, geometry, width, height);
            for (const listener of this.listeners) {
                listener({ width, height, selection });
            }
        } catch {
            if (seq >= this.appliedSeq) {
                this.banner.hidden = false;
            }
        }
    }

    private beginDrag(down: PointerEvent): void {
        down.preventDefault();
        const startX = down.clientX;
        const startY = down.clientY;
        const startW = this.width;
        const startH = this.height;
        const doc = this.element.ownerDocument;

        const move = (ev: Event): void => {
            const p = ev as PointerEvent;
            this.setSize(startW + (p.clientX - startX), startH + (p.clientY - startY));
        };
        const up = (): void => {
            doc.removeEventListener("pointermove", move);
            doc.removeEventListener("pointerup", up);
        };
        doc.addEventListener("pointermove", move);
        doc.addEventListener("pointerup", up);
    }
}
