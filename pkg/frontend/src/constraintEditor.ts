// Constraint editor: one numeric input per constraint threshold. Edits POST
// the whole modified spec; the service either confirms (generation bump) or
// rejects with diagnostics that are shown inline next to the offending field.

import { ApiError, type ApiClient } from "./apiClient";
import type { SpecDoc } from "./types";

export class ConstraintEditor {
    readonly element: HTMLElement;
    private spec: SpecDoc | null = null;
    private generation = -1;

    constructor(
        private readonly client: ApiClient,
        root: HTMLElement,
        private readonly onApplied?: (generation: number) => void,
    ) {
        this.element = root.ownerDocument.createElement("form");
        this.element.className = "constraint-editor";
        root.appendChild(this.element);
    }

    get currentGeneration(): number {
        return this.generation;
    }

    /** Load the active spec from the service and (re)build the fields. */
    async load(): Promise<void> {
        const meta = await this.client.meta();
        this.spec = meta.spec;
        this.generation = meta.generation;
        this.build();
    }

    private fieldId(viewIndex: number, constraintIndex: number): string {
        return `constraint-${viewIndex}-${constraintIndex}`;
    }

    input(viewIndex: number, constraintIndex: number): HTMLInputElement {
        const node = this.element.querySelector<HTMLInputElement>(
            `#${this.fieldId(viewIndex, constraintIndex)}`,
        );
        if (!node) {
            throw new Error("no such constraint field");
        }
        return node;
    }

    errorText(viewIndex: number, constraintIndex: number): string {
        const node = this.element.querySelector(
            `#${this.fieldId(viewIndex, constraintIndex)}-error`,
        );
        return node?.textContent ?? "";
    }

    /** Change one threshold and POST the updated spec. */
    async setThreshold(
        viewIndex: number,
        constraintIndex: number,
        value: number,
    ): Promise<void> {
        const input = this.input(viewIndex, constraintIndex);
        input.value = String(value);
        await this.submit(viewIndex, constraintIndex);
    }

    private build(): void {
        const doc = this.element.ownerDocument;
        this.element.textContent = "";
        if (!this.spec) {
            return;
        }
        this.spec.views.forEach((view, vi) => {
            const section = doc.createElement("fieldset");
            const legend = doc.createElement("legend");
            legend.textContent = `${view.id} (${view.type})`;
            section.appendChild(legend);
            view.constraints.forEach((constraint, ci) => {
                const label = doc.createElement("label");
                label.textContent = constraint.kind;
                const input = doc.createElement("input");
                input.type = "number";
                input.step = "any";
                input.id = this.fieldId(vi, ci);
                input.value = String(constraint.threshold);
                input.addEventListener("change", () => {
                    void this.submit(vi, ci);
                });
                const error = doc.createElement("span");
                error.className = "field-error";
                error.id = `${input.id}-error`;
                label.appendChild(input);
                label.appendChild(error);
                section.appendChild(label);
            });
            this.element.appendChild(section);
        });
    }

    private async submit(viewIndex: number, constraintIndex: number): Promise<void> {
        if (!this.spec) {
            return;
        }
        const input = this.input(viewIndex, constraintIndex);
        const error = this.element.querySelector(`#${input.id}-error`)!;
        const value = Number(input.value);
        const previous = this.spec.views[viewIndex].constraints[constraintIndex].threshold;

        // optimistic: edit in place, roll back on rejection
        const edited: SpecDoc = JSON.parse(JSON.stringify(this.spec));
        edited.views[viewIndex].constraints[constraintIndex].threshold = value;
        try {
            const accepted = await this.client.postSpec(edited);
            this.spec = edited;
            this.generation = accepted.generation;
            error.textContent = "";
            this.onApplied?.(accepted.generation);
        } catch (e) {
            input.value = String(previous);
            if (e instanceof ApiError) {
                const diag = e.body.diagnostics?.find((d) => d.severity === "error");
                error.textContent = diag?.message ?? e.body.error ?? "rejected";
            } else {
                error.textContent = "service unreachable";
            }
        }
    }
}
