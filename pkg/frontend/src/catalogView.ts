/** Catalog tab: entry list with prefix filter, duplicate groups, entry
 * detail, and a document form editor that posts to the catalog and shows
 * duplicate warnings inline.
 *
 * The list section re-renders on every reload; the detail pane and the
 * form (with its inline save feedback) are stable elements. */

import { Api, ApiError, CatalogEntry, REPRESENTATION_MARKER, UdmDocument } from './api';
import { clear, el } from './dom';

export class CatalogView {
  private entries: CatalogEntry[] = [];
  private groups: string[][] = [];
  private prefix = '';

  private readonly listSection = el('section', { 'data-testid': 'catalog-pane-list' });
  private readonly detailPane = el('section', { 'data-testid': 'detail-pane' });
  private readonly feedback = el('div', { 'data-testid': 'save-feedback', class: 'save-feedback' });

  constructor(
    private readonly root: HTMLElement,
    private readonly api: Api,
    private readonly onError: (message: string) => void = () => {},
  ) {}

  async mount(): Promise<void> {
    this.root.append(this.listSection, this.detailPane, this.renderForm());
    await this.reload();
  }

  async reload(): Promise<void> {
    try {
      const [{ entries }, { groups }] = await Promise.all([
        this.api.catalogEntries(this.prefix || undefined),
        this.api.catalogDupes(),
      ]);
      this.entries = entries;
      this.groups = groups;
      this.renderList();
    } catch (error) {
      this.onError(error instanceof ApiError ? error.message : 'the server is unreachable');
    }
  }

  private renderList(): void {
    clear(this.listSection);
    const filter = el('input', {
      type: 'text',
      placeholder: 'filter by pattern-code prefix, e.g. E1.3',
      'data-testid': 'prefix-filter',
      value: this.prefix,
      change: (event: Event) => {
        this.prefix = (event.target as HTMLInputElement).value.trim();
        void this.reload();
      },
    });
    const list = el('ul', { 'data-testid': 'catalog-entries', class: 'catalog-list' });
    for (const entry of this.entries) {
      list.append(el(
        'li',
        { 'data-id': entry.id },
        el('strong', {}, entry.document.method_name),
        el('br'),
        el('code', {}, entry.signature.split('\n').join(' | ')),
        ' ',
        el('button', { type: 'button', click: () => this.showDetail(entry) }, 'detail'),
        ' ',
        el('button', {
          type: 'button',
          click: () => {
            void this.api.catalogRemove(entry.id).then(() => this.reload());
          },
        }, 'remove'),
      ));
    }

    const dupes = el('ul', { 'data-testid': 'dupe-groups' });
    for (const group of this.groups) {
      dupes.append(el('li', {}, `same signature: ${group.join(', ')}`));
    }

    this.listSection.append(
      el('h2', {}, 'Catalog entries'),
      filter,
      list,
      el('h2', {}, 'Duplicate groups'),
      this.groups.length ? dupes : el('p', {}, 'none'),
    );
  }

  private showDetail(entry: CatalogEntry): void {
    clear(this.detailPane);
    const doc = entry.document;
    const representation = typeof doc.representation_patterns === 'string'
      ? [doc.representation_patterns]
      : doc.representation_patterns;
    this.detailPane.append(
      el('h2', {}, doc.method_name),
      el('p', {}, doc.application_scenario),
      el('h3', {}, 'Embedding patterns'),
      el('ul', {}, ...doc.embedding_patterns.map((text) => el('li', {}, el('code', {}, text)))),
      el('h3', {}, 'Representation patterns'),
      el('ul', {}, ...representation.map((text) => el('li', {}, el('code', {}, text)))),
      el('p', {}, el('small', {}, `id ${entry.id}, created ${entry.created_at}`)),
    );
  }

  private renderForm(): HTMLElement {
    const field = (testId: string, label: string, multiline = false) => {
      const input = multiline
        ? el('textarea', { 'data-testid': testId, rows: '3' })
        : el('input', { type: 'text', 'data-testid': testId });
      return { node: el('label', { class: 'form-field' }, label, input), input };
    };

    const name = field('doc-name', 'Method name');
    const scenario = field('doc-scenario', 'Application scenario');
    const embedding = field('doc-embedding', 'Embedding descriptors (one per line)', true);
    const representation = field(
      'doc-representation',
      'Representation descriptors (one per line; leave empty to derive from the embedding patterns)',
      true,
    );
    const covers = field('doc-covers', 'Required cover properties (one per line)', true);
    const robustness = field('doc-robustness', 'Robustness');
    const countermeasures = field('doc-countermeasures', 'Countermeasures (one per line)', true);
    const capacity = field('doc-capacity', 'Capacity');
    const protocol = field('doc-protocol', 'Channel-internal protocol (optional)');
    const references = field('doc-references', 'References (one per line)', true);

    const lines = (node: HTMLElement): string[] =>
      (node as HTMLTextAreaElement).value.split('\n').map((s) => s.trim()).filter(Boolean);

    const save = async () => {
      const representationLines = lines(representation.input);
      const doc: UdmDocument = {
        method_name: (name.input as HTMLInputElement).value.trim(),
        application_scenario: (scenario.input as HTMLInputElement).value.trim(),
        embedding_patterns: lines(embedding.input),
        representation_patterns: representationLines.length
          ? representationLines
          : REPRESENTATION_MARKER,
        required_cover_properties: lines(covers.input),
        channel_properties: {
          robustness: (robustness.input as HTMLInputElement).value.trim(),
          countermeasures: lines(countermeasures.input),
          capacity: (capacity.input as HTMLInputElement).value.trim(),
        },
        references: lines(references.input),
      };
      const protocolText = (protocol.input as HTMLInputElement).value.trim();
      if (protocolText) doc.channel_internal_protocol = protocolText;

      clear(this.feedback);
      try {
        const { entry, duplicates } = await this.api.catalogAdd(doc);
        this.feedback.append(el('p', { class: 'ok' }, `saved as ${entry.id}`));
        if (duplicates.length > 0) {
          this.feedback.append(el('p', {
            class: 'warning',
            'data-testid': 'duplicate-warning',
          }, `same signature as existing entries: ${duplicates.join(', ')}`));
        }
        await this.reload();
      } catch (error) {
        if (error instanceof ApiError) {
          this.feedback.append(el('p', { class: 'error' }, error.message));
          for (const diag of error.diagnostics) {
            this.feedback.append(el('p', { class: 'error', 'data-code': diag.code },
              `${diag.code}: ${diag.message}`));
          }
        } else {
          this.onError('the server is unreachable; the form content is kept');
        }
      }
    };

    return el('section', { class: 'doc-form' },
      el('h2', {}, 'Describe a new method'),
      name.node, scenario.node, embedding.node, representation.node, covers.node,
      robustness.node, countermeasures.node, capacity.node, protocol.node, references.node,
      el('button', { type: 'button', 'data-testid': 'save-doc', click: () => void save() }, 'save'),
      this.feedback,
    );
  }
}
