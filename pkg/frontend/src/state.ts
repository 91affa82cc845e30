/** Composer selection state and its mapping to a descriptor string and to
 * shareable URL queries.
 *
 * The state holds raw selections only. `descriptorText` concatenates them
 * into a descriptor the server can read (labels added per the clause
 * rules); all canonicalization stays on the server. */

export interface ComposerState {
  locality: 'local' | 'distributed';
  distribution:
    | ''
    | 'pattern variation'
    | 'host-based scattering'
    | 'flow-based scattering'
    | 'protocol-based scattering'
    | 'pattern combination'
    | 'pattern hopping';
  directness: 'direct' | 'indirect';
  indirectPattern: '' | 'redirector' | 'broker' | 'proxy' | 'dead drop';
  activeness: 'active' | 'passive' | 'semi-active' | 'semi-passive' | 'fully-passive';
  level: 'single-level' | 'multi-level';
  temporality: 'present-focused' | 'history-focused' | 'future-focused';
  starProperties: string[];
  /** Pattern codes in clause order, picked from the taxonomy tree. */
  patternCodes: string[];
}

export function initialState(): ComposerState {
  return {
    locality: 'local',
    distribution: '',
    directness: 'direct',
    indirectPattern: '',
    activeness: 'active',
    level: 'single-level',
    temporality: 'present-focused',
    starProperties: [],
    patternCodes: [],
  };
}

export const DISTRIBUTIONS: ComposerState['distribution'][] = [
  '',
  'pattern variation',
  'host-based scattering',
  'flow-based scattering',
  'protocol-based scattering',
  'pattern combination',
  'pattern hopping',
];

export const INDIRECT_PATTERNS: ComposerState['indirectPattern'][] = [
  'redirector',
  'broker',
  'proxy',
  'dead drop',
];

export const ACTIVENESS_VALUES: ComposerState['activeness'][] = [
  'active',
  'passive',
  'semi-active',
  'semi-passive',
  'fully-passive',
];

export const TEMPORALITY_VALUES: ComposerState['temporality'][] = [
  'present-focused',
  'history-focused',
  'future-focused',
];

/** Clause labeling rule, enforced client-side before submission: two or
 * more clauses are labeled (a), (b), ... consecutively; one clause is
 * unlabeled. */
export function clauseSection(codes: string[]): string {
  if (codes.length === 1) return codes[0];
  return codes
    .map((code, i) => `(${String.fromCharCode(97 + i)}) ${code}`)
    .join(', ');
}

/** Assemble the descriptor string for the current selections. Default
 * values are simply omitted; names are left for the server to fill. */
export function descriptorText(state: ComposerState): string {
  const parts: string[] = [];
  if (state.locality === 'distributed') {
    parts.push(state.distribution ? `distributed (${state.distribution})` : 'distributed');
  }
  if (state.directness === 'indirect') {
    // an empty sub-pattern is submitted as bare "indirect" so the server
    // reports the missing-indirect-pattern diagnostic
    parts.push(state.indirectPattern ? `indirect (${state.indirectPattern})` : 'indirect');
  }
  if (state.activeness !== 'active') {
    parts.push(state.activeness);
  }
  if (state.level === 'multi-level') {
    parts.push('multi-level');
  }
  if (state.temporality !== 'present-focused') {
    parts.push(state.temporality);
  }
  for (const text of state.starProperties) {
    if (text.trim()) parts.push(`[${text.trim()}]`);
  }
  if (state.patternCodes.length > 0) {
    parts.push(clauseSection(state.patternCodes));
  }
  return parts.join(' ');
}

export function isSubmittable(state: ComposerState): boolean {
  return state.patternCodes.length > 0;
}

/** Encode the state as URL query parameters for shareable composer links. */
export function encodeState(state: ComposerState): string {
  const params = new URLSearchParams();
  if (state.locality !== 'local') params.set('loc', state.locality);
  if (state.distribution) params.set('dist', state.distribution);
  if (state.directness !== 'direct') params.set('dir', state.directness);
  if (state.indirectPattern) params.set('ind', state.indirectPattern);
  if (state.activeness !== 'active') params.set('act', state.activeness);
  if (state.level !== 'single-level') params.set('lvl', state.level);
  if (state.temporality !== 'present-focused') params.set('tmp', state.temporality);
  for (const star of state.starProperties) params.append('star', star);
  for (const code of state.patternCodes) params.append('p', code);
  return params.toString();
}

function pick<T extends string>(value: string | null, allowed: readonly T[], fallback: T): T {
  return allowed.includes(value as T) ? (value as T) : fallback;
}

export function decodeState(query: string): ComposerState {
  const params = new URLSearchParams(query);
  const state = initialState();
  state.locality = pick(params.get('loc'), ['local', 'distributed'], 'local');
  state.distribution = pick(params.get('dist'), DISTRIBUTIONS, '');
  state.directness = pick(params.get('dir'), ['direct', 'indirect'], 'direct');
  state.indirectPattern = pick(params.get('ind'), ['', ...INDIRECT_PATTERNS], '');
  state.activeness = pick(params.get('act'), ACTIVENESS_VALUES, 'active');
  state.level = pick(params.get('lvl'), ['single-level', 'multi-level'], 'single-level');
  state.temporality = pick(params.get('tmp'), TEMPORALITY_VALUES, 'present-focused');
  state.starProperties = params.getAll('star');
  state.patternCodes = params.getAll('p');
  if (state.locality === 'local') state.distribution = '';
  if (state.directness === 'direct') state.indirectPattern = '';
  return state;
}
