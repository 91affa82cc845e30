/** In-memory stand-in for the backend, answering from recorded server
 * responses (tests/fixtures/server.json is generated against the live
 * service, so these tests share one source of truth with the backend). */

import fixtures from './fixtures/server.json';
import type { CatalogEntry, UdmDocument } from '../src/api';

interface Recorded {
  status: number;
  body: unknown;
}

interface DescriptorCase {
  normalize: Recorded;
  validate: Recorded;
  explain: Recorded;
}

const descriptorCases: Record<string, DescriptorCase> =
  fixtures.descriptors as Record<string, DescriptorCase>;

function jsonResponse(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { 'content-type': 'application/json' },
  });
}

export interface FakeServer {
  fetch: typeof fetch;
  /** Descriptor strings the client sent to /api/normalize, in order. */
  normalizeRequests: string[];
  catalogPrefixes: (string | null)[];
  /** Entries currently stored by the fake catalog. */
  entries: CatalogEntry[];
  failNetwork: boolean;
}

export function makeFakeServer(): FakeServer {
  const state: FakeServer = {
    normalizeRequests: [],
    catalogPrefixes: [],
    entries: [],
    failNetwork: false,
    fetch: undefined as unknown as typeof fetch,
  };

  let nextId = 1;

  const handle = async (path: string, init?: RequestInit): Promise<Response> => {
    if (state.failNetwork) {
      throw new TypeError('network failure (fake)');
    }
    const body = init?.body ? JSON.parse(String(init.body)) : null;
    const method = init?.method ?? 'GET';

    if (path === '/api/taxonomy') {
      return jsonResponse(200, fixtures.taxonomy);
    }
    if (path.startsWith('/api/catalog') && method === 'GET') {
      if (path === '/api/catalog/dupes') {
        const groups: Record<string, string[]> = {};
        for (const entry of state.entries) {
          (groups[entry.signature] ??= []).push(entry.id);
        }
        return jsonResponse(200, {
          groups: Object.values(groups).filter((ids) => ids.length >= 2),
        });
      }
      const url = new URL(path, 'http://fake');
      state.catalogPrefixes.push(url.searchParams.get('prefix'));
      return jsonResponse(200, { entries: state.entries });
    }
    if (path === '/api/catalog' && method === 'POST') {
      const doc = body as UdmDocument;
      const signature = [...doc.embedding_patterns].sort().join('\n');
      const duplicates = state.entries
        .filter((entry) => entry.signature === signature)
        .map((entry) => entry.id);
      const entry: CatalogEntry = {
        id: `fake-${nextId++}`,
        created_at: '2026-01-01T00:00:00+00:00',
        updated_at: '2026-01-01T00:00:00+00:00',
        signature,
        document: doc,
      };
      state.entries.push(entry);
      return jsonResponse(200, { entry, duplicates });
    }

    const descriptor = body?.descriptor as string | undefined;
    const recorded = descriptor !== undefined ? descriptorCases[descriptor] : undefined;
    if (path === '/api/normalize' && descriptor !== undefined) {
      state.normalizeRequests.push(descriptor);
      if (!recorded) throw new Error(`no recorded response for ${descriptor}`);
      return jsonResponse(recorded.normalize.status, recorded.normalize.body);
    }
    if (path === '/api/validate' && recorded) {
      return jsonResponse(recorded.validate.status, recorded.validate.body);
    }
    if (path === '/api/explain' && recorded) {
      return jsonResponse(recorded.explain.status, recorded.explain.body);
    }
    throw new Error(`fake server: unhandled ${method} ${path}`);
  };

  state.fetch = ((input: RequestInfo | URL, init?: RequestInit) =>
    handle(String(input), init)) as typeof fetch;
  return state;
}
