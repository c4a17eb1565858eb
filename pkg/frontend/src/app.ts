// Wire the three widgets together into the designer playground: panel
// resizes move the minimap cursor, minimap clicks resize the panel, and
// accepted spec edits refetch both the landscape and the selection.

import { ApiClient } from "./apiClient";
import { ConstraintEditor } from "./constraintEditor";
import { Minimap } from "./minimap";
import { ViewportPanel } from "./viewportPanel";

export interface Playground {
    client: ApiClient;
    panel: ViewportPanel;
    minimap: Minimap;
    editor: ConstraintEditor;
    /** initial data loaded and first render applied */
    ready: Promise<void>;
}

export function createPlayground(
    root: HTMLElement,
    baseUrl: string,
    options: { landscapeStep?: number } = {},
): Playground {
    const client = new ApiClient(baseUrl);
    const panel = new ViewportPanel(client, root);
    const minimap = new Minimap(client, root, {
        step: options.landscapeStep,
        onPick: (w, h) => panel.setSize(w, h),
    });
    const editor = new ConstraintEditor(client, root, () => {
        void minimap.refresh();
        void panel.refresh();
    });

    panel.onChange(({ width, height }) => minimap.setCursor(width, height));

    const ready = (async () => {
        await editor.load();
        await minimap.refresh();
        await panel.refresh();
    })();

    return { client, panel, minimap, editor, ready };
}

export { ApiClient, ApiError } from "./apiClient";
export { ConstraintEditor } from "./constraintEditor";
export { Minimap } from "./minimap";
export { ViewportPanel, RESIZE_DEBOUNCE_MS } from "./viewportPanel";
export { decodeLandscape, labelAt, areaShares, cellIndex } from "./landscape";
export { renderGeometry } from "./geometry";
export { labelColors, categoryColor } from "./palette";
export type * from "./types";
