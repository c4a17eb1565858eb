// Color assignments shared with the service's landscape renderer so the
// minimap matches the PNG/SVG exports cell for cell.

export const VIEW_PALETTE = [
    "#4daf4a", "#ffd92f", "#377eb8", "#e78ac3",
    "#ff7f00", "#a65628", "#66c2a5", "#8da0cb",
] as const;

export const FALLBACK_LABEL = "(fallback)";
export const ERROR_LABEL = "(error)";
export const FALLBACK_COLOR = "#c8c8c8";
export const ERROR_COLOR = "#d73027";

/** Map landscape labels to colors the same way the service renderer does:
 *  reserved colors for fallback/error, palette cycling for real views. */
export function labelColors(labels: readonly string[]): string[] {
    const colors: string[] = [];
    let vi = 0;
    for (const label of labels) {
        if (label === FALLBACK_LABEL) {
            colors.push(FALLBACK_COLOR);
        } else if (label === ERROR_LABEL) {
            colors.push(ERROR_COLOR);
        } else {
            colors.push(VIEW_PALETTE[vi % VIEW_PALETTE.length]);
            vi += 1;
        }
    }
    return colors;
}

const CATEGORY_PALETTE = [
    "#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e",
    "#e6ab02", "#a6761d", "#666666", "#386cb0", "#f0027f",
] as const;

/** Stable category -> color mapping within one rendered view. */
export function categoryColor(
    category: string | undefined,
    assigned: Map<string, string>,
): string {
    if (category === undefined) {
        return "#4c78a8";
    }
    let color = assigned.get(category);
    if (color === undefined) {
        color = CATEGORY_PALETTE[assigned.size % CATEGORY_PALETTE.length];
        assigned.set(category, color);
    }
    return color;
}
