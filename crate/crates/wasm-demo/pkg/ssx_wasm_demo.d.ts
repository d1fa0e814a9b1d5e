/* tslint:disable */
/* eslint-disable */

/**
 * Fibration check of a map, functor or sgpd map with a witness on failure. `mode` is one of
 * kan, trivial-kan, weak-kan or weak-trivial-kan.
 */
export function check_kan(text: string, dim: number, mode: string): string;

/**
 * Names of the bundled corpus objects.
 */
export function corpus_names(): string[];

export function corpus_text(name: string): string | undefined;

export function describe(text: string): string;

/**
 * Integral homology of an sset, the nerve of a groupoid, or sing of an sgpd.
 */
export function homology(text: string, dim: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly check_kan: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly corpus_names: () => [number, number];
    readonly corpus_text: (a: number, b: number) => [number, number];
    readonly describe: (a: number, b: number) => [number, number, number, number];
    readonly homology: (a: number, b: number, c: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __externref_drop_slice: (a: number, b: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
