/** Step-by-step descriptor composer.
 *
 * The steps follow the naming-component order (locality, directness,
 * activeness, level, temporality, star properties, patterns). Every
 * selection change sends normalize + validate + explain requests; the
 * canonical string, diagnostics, and explanations always show the latest
 * server response (stale ones are discarded by sequence number). */

import type { Api, Diagnostic, ExplanationEntry, TaxonomyNode } from './api';
import { clear, el, option } from './dom';
import { RequestSequencer } from './sequencer';
import { renderTree } from './taxonomyView';
import {
  ACTIVENESS_VALUES,
  ComposerState,
  DISTRIBUTIONS,
  INDIRECT_PATTERNS,
  TEMPORALITY_VALUES,
  descriptorText,
  encodeState,
  isSubmittable,
} from './state';

export interface ComposerOptions {
  onError?: (message: string) => void;
  onStateChange?: (state: ComposerState) => void;
}

export class Composer {
  private readonly sequencer = new RequestSequencer();
  private taxonomyRoots: TaxonomyNode[] = [];

  constructor(
    private readonly root: HTMLElement,
    private readonly api: Api,
    public state: ComposerState,
    private readonly options: ComposerOptions = {},
  ) {}

  async mount(): Promise<void> {
    try {
      const { roots } = await this.api.taxonomy();
      this.taxonomyRoots = roots;
    } catch {
      this.options.onError?.('cannot load the pattern taxonomy from the server');
    }
    this.render();
    await this.refresh();
  }

  private changed(): void {
    this.options.onStateChange?.(this.state);
    this.render();
    void this.refresh();
  }

  private render(): void {
    clear(this.root);
    this.root.append(
      this.renderSteps(),
      el('section', { class: 'output' },
        el('h2', {}, 'Canonical descriptor'),
        el('div', { class: 'canonical-row' },
          el('output', { 'data-testid': 'canonical', class: 'canonical' }, ''),
          el('button', {
            type: 'button',
            'data-testid': 'copy',
            click: () => void this.copyCanonical(),
          }, 'copy'),
        ),
        el('ul', { 'data-testid': 'diagnostics', class: 'diagnostics' }),
        el('h2', {}, 'Explanation'),
        el('dl', { 'data-testid': 'explanations', class: 'explanations' }),
      ),
    );
  }

  private renderSteps(): HTMLElement {
    const s = this.state;
    const steps = el('section', { class: 'steps' });

    steps.append(this.step('1. Locality',
      this.select('locality', ['local', 'distributed'], s.locality, (v) => {
        s.locality = v as ComposerState['locality'];
        if (s.locality === 'local') s.distribution = '';
      }),
      s.locality === 'distributed'
        ? this.select('distribution', DISTRIBUTIONS, s.distribution, (v) => {
            s.distribution = v as ComposerState['distribution'];
          }, 'unspecified')
        : null,
    ));

    steps.append(this.step('2. Directness',
      this.select('directness', ['direct', 'indirect'], s.directness, (v) => {
        s.directness = v as ComposerState['directness'];
        if (s.directness === 'direct') s.indirectPattern = '';
      }),
      s.directness === 'indirect'
        ? this.select('indirect-pattern', ['', ...INDIRECT_PATTERNS], s.indirectPattern, (v) => {
            s.indirectPattern = v as ComposerState['indirectPattern'];
          }, 'choose a pattern')
        : null,
    ));

    steps.append(this.step('3. Activeness',
      this.select('activeness', ACTIVENESS_VALUES, s.activeness, (v) => {
        s.activeness = v as ComposerState['activeness'];
      }),
    ));

    const multiLevel = el('input', {
      type: 'checkbox',
      'data-testid': 'multi-level',
      change: (event: Event) => {
        s.level = (event.target as HTMLInputElement).checked ? 'multi-level' : 'single-level';
        this.changed();
      },
    });
    multiLevel.checked = s.level === 'multi-level';
    steps.append(this.step('4. Level', el('label', {}, multiLevel, ' multi-level')));

    steps.append(this.step('5. Reference-temporality',
      this.select('temporality', TEMPORALITY_VALUES, s.temporality, (v) => {
        s.temporality = v as ComposerState['temporality'];
      }),
    ));

    steps.append(this.step('6. Star properties', this.renderStars()));
    steps.append(this.step('7. Hiding patterns', this.renderPatterns()));
    return steps;
  }

  private step(title: string, ...children: (HTMLElement | null)[]): HTMLElement {
    return el('fieldset', { class: 'step' }, el('legend', {}, title),
      ...children.filter((c): c is HTMLElement => c !== null));
  }

  private select(
    testId: string,
    values: readonly string[],
    current: string,
    apply: (value: string) => void,
    emptyLabel = '',
  ): HTMLElement {
    const node = el('select', {
      'data-testid': testId,
      change: (event: Event) => {
        apply((event.target as HTMLSelectElement).value);
        this.changed();
      },
    });
    for (const value of values) {
      node.append(option(value, value === '' ? emptyLabel : value, value === current));
    }
    return node;
  }

  private renderStars(): HTMLElement {
    const list = el('div', { class: 'stars' });
    this.state.starProperties.forEach((text, index) => {
      const input = el('input', {
        type: 'text',
        value: text,
        'data-testid': `star-${index}`,
        change: (event: Event) => {
          this.state.starProperties[index] = (event.target as HTMLInputElement).value;
          this.changed();
        },
      });
      list.append(el('div', {}, input, el('button', {
        type: 'button',
        click: () => {
          this.state.starProperties.splice(index, 1);
          this.changed();
        },
      }, 'remove')));
    });
    list.append(el('button', {
      type: 'button',
      'data-testid': 'add-star',
      click: () => {
        this.state.starProperties.push('');
        this.changed();
      },
    }, 'add star property'));
    return list;
  }

  private renderPatterns(): HTMLElement {
    const section = el('div', { class: 'patterns' });
    const picked = el('ol', { 'data-testid': 'picked-patterns' });
    this.state.patternCodes.forEach((code, index) => {
      picked.append(el('li', {}, el('code', {}, code), ' ', el('button', {
        type: 'button',
        click: () => {
          this.state.patternCodes.splice(index, 1);
          this.changed();
        },
      }, 'remove')));
    });
    section.append(picked);
    section.append(el('p', { class: 'hint' },
      'Pick embedding patterns from the taxonomy; the first pick is the outermost layer of a multi-level method.'));
    section.append(this.renderPicker());
    return section;
  }

  private renderPicker(): HTMLElement {
    const container = el('div', { 'data-testid': 'pattern-picker' });
    container.append(renderTree(this.taxonomyRoots, {
      kind: 'E',
      onPick: (node) => {
        this.state.patternCodes.push(node.code);
        this.changed();
      },
    }));
    return container;
  }

  private async copyCanonical(): Promise<void> {
    const text = this.root.querySelector<HTMLElement>('[data-testid="canonical"]')?.textContent;
    if (text && navigator.clipboard) {
      await navigator.clipboard.writeText(text);
    }
  }

  async refresh(): Promise<void> {
    const seq = this.sequencer.next();
    const text = descriptorText(this.state);
    if (!isSubmittable(this.state)) {
      this.showCanonical('');
      this.showDiagnostics([]);
      this.showExplanations([]);
      return;
    }
    try {
      const [normalized, validated] = await Promise.all([
        this.api.normalize(text).catch((error) => {
          if (error && typeof error === 'object' && 'diagnostics' in error) {
            return { canonical: null, diagnostics: (error as { diagnostics: Diagnostic[] }).diagnostics };
          }
          throw error;
        }),
        this.api.validate(text),
      ]);
      const explained = validated.ok
        ? await this.api.explain(text)
        : { entries: [] as ExplanationEntry[] };
      if (!this.sequencer.isCurrent(seq)) return;
      this.showCanonical(normalized.canonical ?? '');
      this.showDiagnostics(validated.diagnostics);
      this.showExplanations(explained.entries);
    } catch {
      if (!this.sequencer.isCurrent(seq)) return;
      this.options.onError?.('the server is unreachable; selections are kept');
    }
  }

  private showCanonical(text: string): void {
    const node = this.root.querySelector<HTMLElement>('[data-testid="canonical"]');
    if (node) node.textContent = text;
  }

  private showDiagnostics(diagnostics: Diagnostic[]): void {
    const list = this.root.querySelector<HTMLElement>('[data-testid="diagnostics"]');
    if (!list) return;
    clear(list);
    for (const diag of diagnostics) {
      list.append(el('li', { class: `diag-${diag.severity}`, 'data-code': diag.code },
        `${diag.severity} [${diag.code}]: ${diag.message}`));
    }
  }

  private showExplanations(entries: ExplanationEntry[]): void {
    const list = this.root.querySelector<HTMLElement>('[data-testid="explanations"]');
    if (!list) return;
    clear(list);
    for (const entry of entries) {
      list.append(
        el('dt', {}, `${entry.component}: ${entry.value}`),
        el('dd', {}, entry.description),
      );
    }
  }

  shareQuery(): string {
    return encodeState(this.state);
  }
}
