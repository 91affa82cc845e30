/** Typed client for the stegotax JSON API. The UI never computes canonical
 * forms itself; every canonical string displayed comes from these calls. */

export interface Diagnostic {
  code: string;
  severity: 'error' | 'warning';
  message: string;
  span: [number, number] | null;
}

export interface NormalizeResult {
  canonical: string | null;
  diagnostics: Diagnostic[];
}

export interface ValidateResult {
  ok: boolean;
  diagnostics: Diagnostic[];
}

export interface ExplanationEntry {
  component: string;
  value: string;
  description: string;
}

export interface TaxonomyNode {
  code: string;
  name: string;
  description: string;
  parent: string | null;
  domain: string;
  children: TaxonomyNode[];
}

export interface ChannelProperties {
  robustness: string;
  countermeasures: string[];
  capacity: string;
}

export interface UdmDocument {
  method_name: string;
  application_scenario: string;
  embedding_patterns: string[];
  representation_patterns: string | string[];
  required_cover_properties: string[];
  channel_properties: ChannelProperties;
  channel_internal_protocol?: string;
  references: string[];
}

export interface CatalogEntry {
  id: string;
  created_at: string;
  updated_at: string;
  signature: string;
  document: UdmDocument;
}

export interface ApiErrorBody {
  status: number;
  code: string;
  message: string;
  diagnostics?: Diagnostic[];
}

/** Server-reported failure (4xx/5xx with the documented error shape). */
export class ApiError extends Error {
  constructor(readonly body: ApiErrorBody) {
    super(body.message);
  }
  get diagnostics(): Diagnostic[] {
    return this.body.diagnostics ?? [];
  }
}

export const REPRESENTATION_MARKER = 'representation variant of embedding pattern';

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(path, {
    headers: { 'content-type': 'application/json' },
    ...init,
  });
  const body = await response.json();
  if (!response.ok) {
    throw new ApiError(body as ApiErrorBody);
  }
  return body as T;
}

function post<T>(path: string, payload: unknown): Promise<T> {
  return request<T>(path, { method: 'POST', body: JSON.stringify(payload) });
}

export const api = {
  taxonomy(): Promise<{ version: string; roots: TaxonomyNode[] }> {
    return request('/api/taxonomy');
  },
  taxonomyRecord(code: string): Promise<TaxonomyNode & { children: string[] }> {
    return request(`/api/taxonomy/${encodeURIComponent(code)}`);
  },
  normalize(descriptor: string): Promise<NormalizeResult> {
    return post('/api/normalize', { descriptor });
  },
  validate(descriptor: string): Promise<ValidateResult> {
    return post('/api/validate', { descriptor });
  },
  explain(descriptor: string): Promise<{ entries: ExplanationEntry[] }> {
    return post('/api/explain', { descriptor });
  },
  deriveRepresentation(code: string): Promise<{ code: string; name: string | null }> {
    return post('/api/derive-repr', { code });
  },
  validateDocument(doc: UdmDocument): Promise<ValidateResult> {
    return post('/api/udm/validate', doc);
  },
  catalogEntries(prefix?: string): Promise<{ entries: CatalogEntry[] }> {
    const query = prefix ? `?prefix=${encodeURIComponent(prefix)}` : '';
    return request(`/api/catalog${query}`);
  },
  catalogAdd(doc: UdmDocument): Promise<{ entry: CatalogEntry; duplicates: string[] }> {
    return post('/api/catalog', doc);
  },
  catalogDupes(): Promise<{ groups: string[][] }> {
    return request('/api/catalog/dupes');
  },
  catalogRemove(id: string): Promise<{ removed: CatalogEntry }> {
    return request(`/api/catalog/${encodeURIComponent(id)}`, { method: 'DELETE' });
  },
};

export type Api = typeof api;
